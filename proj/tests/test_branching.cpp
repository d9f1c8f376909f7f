#include <doctest.h>

#include "support.hpp"

#include "f4/branching.hpp"
#include "f4/render.hpp"
#include "f4/tables.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace f4;

namespace {

OrbitLabel random_dominant(std::mt19937_64& rng) {
  OrbitLabel a{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) a[i] = test::random_scalar(rng, 1, 9);
  return a;
}

// Partition of the F4 orbit into W(B4) orbits by direct group action.
std::set<std::vector<Quat>> b4_partition(const OrbitLabel& label) {
  std::set<std::vector<Quat>> parts;
  std::set<Quat> covered;
  for (const Quat& v : generate_orbit(SystemName::F4, label).vertices) {
    if (covered.count(v)) continue;
    auto part = orbit_of(group(GroupName::WB4), v);
    covered.insert(part.begin(), part.end());
    parts.insert(std::move(part));
  }
  return parts;
}

}  // namespace

TEST_CASE("B4 parts match the W(B4) partition of the orbit") {
  const RootSystem& b4 = root_system(SystemName::B4);
  for (const auto& row : tables::b4_decompositions()) {
    CAPTURE(row.f4.str());
    const auto partition = b4_partition(row.f4);
    std::set<std::vector<Quat>> from_labels;
    for (const OrbitLabel& part : branch_b4(row.f4).parts) {
      from_labels.insert(orbit_of(group(GroupName::WB4), label_to_vector(b4, part)));
    }
    CHECK(from_labels == partition);
  }
}

TEST_CASE("slice heights and sizes against the floating-point orbit") {
  for (const auto& row : tables::b3a1_decompositions()) {
    CAPTURE(row.f4.str());
    std::map<long, std::size_t> by_height;
    for (const Quat& v : generate_orbit(SystemName::F4, row.f4).vertices) {
      by_height[std::lround(v[0].to_double() / std::sqrt(2.0) * 1e6)] += 1;
    }
    std::map<long, std::size_t> from_slices;
    for (const ProjectedSlice& s : project_3d(row.f4)) {
      from_slices[std::lround(s.height.to_double() * 1e6)] += s.points.size();
    }
    CHECK(from_slices == by_height);
  }
}

TEST_CASE("worked branchings render in the reference notation") {
  CHECK(render(branch_b4(OrbitLabel{1, 1, 0, 0})) ==
        "(1,1,0,0)_F4 = (0,0,sqrt2,1)_B4 + (sqrt2,0,0,2)_B4 + (2sqrt2,0,0,1)_B4");
  CHECK(render(branch_b4(OrbitLabel{0, 0, 0, 1})) == "(0,0,0,1)_F4 = (0,1,0,0)_B4");
  const B3A1Branching b = branch_b3a1(OrbitLabel{0, 0, 0, 1});
  CHECK(b.slices.size() == 2);
  CHECK(b3a1_union_matches(b));
}

TEST_CASE("generic branching formulas on seeded dominant labels") {
  std::mt19937_64 rng(test::seed() + 20);
  INFO(test::seed_note());
  const auto formula = tables::b3a1_formula();
  const RootSystem& f4 = root_system(SystemName::F4);
  const RootSystem& b3 = root_system(SystemName::B3R);
  for (int trial = 0; trial < 8; ++trial) {
    const OrbitLabel a = random_dominant(rng);
    CAPTURE(a.str());
    const auto b4 = tables::b4_formula(a);
    const auto parts = branch_b4(a).parts;
    CHECK(std::set<OrbitLabel>(parts.begin(), parts.end()) == std::set<OrbitLabel>(b4.begin(), b4.end()));

    const B3A1Branching b = branch_b3a1(a);
    CHECK(b.slices.size() == 12);
    CHECK(b3a1_union_matches(b));
    std::set<std::pair<OrbitLabel, FieldScalar>> got, want;
    for (const B3Slice& s : b.slices) got.emplace(s.b3_label, s.height);
    const FieldScalar r2 = norm2(label_to_vector(f4, a));
    for (const auto& f : formula) {
      const OrbitLabel l = f.corrected_label ? (*f.corrected_label)(a) : f.label(a);
      const FieldScalar h = f.corrected_height ? (*f.corrected_height)(a) : f.height(a);
      // Every slice lies on the sphere through the orbit.
      CHECK(2 * h * h + norm2(label_to_vector(b3, l)) == r2);
      want.emplace(l, h);
    }
    CHECK(got == want);
  }
}

TEST_CASE("projection lifts back to the orbit") {
  for (const OrbitLabel& label : {OrbitLabel{1, 0, 0, 0}, OrbitLabel{0, 0, 0, 1}, OrbitLabel{1, 1, 0, 1}}) {
    std::vector<Quat> lifted;
    for (const ProjectedSlice& s : project_3d(label)) {
      for (const Point3& p : s.points) lifted.push_back(lift(s.height, p));
    }
    std::sort(lifted.begin(), lifted.end());
    CHECK(lifted == generate_orbit(SystemName::F4, label).vertices);
  }
}
