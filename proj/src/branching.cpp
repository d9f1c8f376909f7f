#include "f4/branching.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace f4 {

namespace {

const RootSystem& f4sys() { return root_system(SystemName::F4); }
const RootSystem& b3sys() { return root_system(SystemName::B3R); }

Quat vector_part(const Quat& v) { return {0, v[1], v[2], v[3]}; }

FieldScalar height_of(const Quat& v) { return v[0] / FieldScalar::sqrt2(); }

void require_f4(const OrbitLabel& label) {
  if (label.rank() != 4 || label.is_zero() || !label.is_dominant())
    throw std::invalid_argument("expected a dominant nonzero F4 label, got " + label.str());
}

}  // namespace

std::vector<GroupElement> b4_coset_representatives() {
  const FieldScalar h = FieldScalar::fraction(1, 2);
  const Quat w0(h, h, h, h);
  return {GroupElement::identity(), GroupElement(w0, Quat::identity(), false),
          GroupElement(w0 * w0, Quat::identity(), false)};
}

B4Branching branch_b4(const OrbitLabel& label) {
  require_f4(label);
  const Quat lambda = label_to_vector(f4sys(), label);
  const RootSystem& b4 = root_system(SystemName::B4);
  std::set<OrbitLabel> parts;
  for (const GroupElement& g : b4_coset_representatives()) {
    parts.insert(dominant_representative(b4, g(lambda)).label);
  }
  return {label, std::vector<OrbitLabel>(parts.begin(), parts.end())};
}

bool b4_union_matches(const B4Branching& b) {
  const Orbit whole = generate_orbit(SystemName::F4, b.input);
  std::vector<Quat> pieces;
  for (const OrbitLabel& part : b.parts) {
    const Orbit o = generate_orbit(SystemName::B4, part);
    pieces.insert(pieces.end(), o.vertices.begin(), o.vertices.end());
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces == whole.vertices;
}

std::vector<GroupElement> b3a1_coset_representatives() {
  std::vector<GroupElement> out;
  for (const Quat& p : subset(SubsetName::T).elements) out.emplace_back(p, Quat::identity(), false);
  return out;
}

B3A1Branching branch_b3a1(const OrbitLabel& label) {
  require_f4(label);
  const Quat lambda = label_to_vector(f4sys(), label);
  std::set<std::pair<OrbitLabel, FieldScalar>> signed_slices;
  for (const GroupElement& g : b3a1_coset_representatives()) {
    const Quat v = g(lambda);
    signed_slices.emplace(dominant_representative(b3sys(), vector_part(v)).label, height_of(v));
  }
  B3A1Branching out{label, {}};
  for (const auto& [lab, h] : signed_slices) {
    if (h.sign() < 0) {
      if (!signed_slices.count({lab, -h}))
        throw std::logic_error("slice " + lab.str() + " at height " + h.str() + " is unpaired");
      continue;
    }
    out.slices.push_back(
        {lab, h, h.is_zero() ? SliceMultiplicity::Zero : SliceMultiplicity::PlusMinus});
  }
  return out;
}

std::size_t slice_vertex_count(const B3Slice& slice) {
  const Quat v = label_to_vector(b3sys(), slice.b3_label);
  const std::size_t n = orbit_of(group(GroupName::WB3R), v).size();
  return slice.multiplicity == SliceMultiplicity::Zero ? n : 2 * n;
}

std::vector<ProjectedSlice> project_3d(const OrbitLabel& label) {
  return project_3d(branch_b3a1(label));
}

std::vector<ProjectedSlice> project_3d(const B3A1Branching& b) {
  std::vector<ProjectedSlice> out;
  for (const B3Slice& s : b.slices) {
    ProjectedSlice base{s.height, s.b3_label, {}};
    for (const Quat& q : orbit_of(group(GroupName::WB3R), label_to_vector(b3sys(), s.b3_label))) {
      base.points.push_back(q.vec());
    }
    out.push_back(base);
    if (s.multiplicity == SliceMultiplicity::PlusMinus) {
      base.height = -s.height;
      out.push_back(base);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ProjectedSlice& a, const ProjectedSlice& b) {
    return a.height > b.height;
  });
  return out;
}

Quat lift(const FieldScalar& height, const Point3& p) {
  return {height * FieldScalar::sqrt2(), p(0), p(1), p(2)};
}

bool b3a1_union_matches(const B3A1Branching& b) {
  const Orbit whole = generate_orbit(SystemName::F4, b.input);
  std::vector<Quat> pieces;
  for (const ProjectedSlice& s : project_3d(b)) {
    for (const Point3& p : s.points) pieces.push_back(lift(s.height, p));
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces == whole.vertices;
}

}  // namespace f4
