#include "f4/verify.hpp"

#include "f4/dual.hpp"
#include "f4/render.hpp"
#include "f4/tables.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace f4 {

namespace {

using Checks = std::vector<Check>;

std::string fmt(double x, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

void add(Checks& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

// Runs body, turning an exception into a failed check.
void guarded(Checks& out, const std::string& name, const std::function<void(Checks&)>& body) {
  try {
    body(out);
  } catch (const std::exception& e) {
    add(out, name, false, std::string("exception: ") + e.what());
  }
}

std::vector<OrbitLabel> zero_one_labels() {
  std::vector<OrbitLabel> out;
  for (int mask = 1; mask < 16; ++mask) {
    OrbitLabel l{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) l[i] = (mask >> (3 - i)) & 1;
    out.push_back(l);
  }
  return out;
}

FieldScalar random_scalar(std::mt19937_64& rng, bool positive) {
  std::uniform_int_distribution<long> num(positive ? 1 : -9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  const FieldScalar a = FieldScalar::fraction(num(rng), den(rng));
  const FieldScalar b = FieldScalar::fraction(num(rng), den(rng));
  return a + b * FieldScalar::sqrt2();
}

Quat random_quat(std::mt19937_64& rng) {
  return Quat(random_scalar(rng, false), random_scalar(rng, false), random_scalar(rng, false),
              random_scalar(rng, false));
}

OrbitLabel random_dominant(std::mt19937_64& rng) {
  return OrbitLabel{random_scalar(rng, true), random_scalar(rng, true), random_scalar(rng, true),
                    random_scalar(rng, true)};
}

std::size_t element_order(const GroupElement& g) {
  GroupElement x = g;
  for (std::size_t n = 1; n <= 48; ++n) {
    if (x == GroupElement::identity()) return n;
    x = compose(x, g);
  }
  return 0;
}

std::vector<Quat> sorted(std::vector<Quat> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::vector<Quat>> sorted_family(std::vector<std::vector<Quat>> family) {
  for (auto& s : family) std::sort(s.begin(), s.end());
  std::sort(family.begin(), family.end());
  return family;
}

// Merges the sets at real parts +r and -r, since the worked slicings list them either way.
std::vector<std::vector<Quat>> paired(const std::vector<std::vector<Quat>>& family) {
  std::map<FieldScalar, std::vector<Quat>> merged;
  for (const auto& set : family) {
    for (const Quat& q : set) merged[abs(q.real())].push_back(q);
  }
  std::vector<std::vector<Quat>> out;
  for (auto& [r, pts] : merged) out.push_back(std::move(pts));
  return sorted_family(out);
}

std::set<std::pair<OrbitLabel, FieldScalar>> slice_set(const B3A1Branching& b) {
  std::set<std::pair<OrbitLabel, FieldScalar>> out;
  for (const B3Slice& s : b.slices) out.emplace(s.b3_label, s.height);
  return out;
}

std::vector<Point3> points_of(const tables::CellTable& t, bool corrected) {
  std::vector<Point3> out;
  for (const auto& row : t.rows) out.push_back(corrected && row.corrected ? *row.corrected : row.printed);
  return out;
}

FieldScalar squared_length(const FieldScalar& a, const FieldScalar& b, const FieldScalar& c) {
  return a * a + b * b + c * c;
}

const tables::CellTable& cell_table(const OrbitLabel& label) {
  static const auto all = tables::dual_cells();
  for (const auto& t : all) {
    if (t.label == label) return t;
  }
  throw std::out_of_range("no tabulated cell for " + label.str());
}

// ---------------------------------------------------------------------------

Checks invariants(std::uint64_t seed) {
  Checks out;
  const RootSystem& f4 = root_system(SystemName::F4);
  guarded(out, "generated group equals listed W(F4)", [](Checks& c) {
    const auto gens = f4_generators();
    add(c, "generated group equals listed W(F4)",
        generate(gens).elements() == build_group(GroupName::WF4).elements());
  });
  guarded(out, "diagram automorphism", [&](Checks& c) {
    const GroupElement d = diagram_automorphism();
    const GroupElement di = inverse(d);
    const auto r = f4_generators();
    auto conj = [&](int i) { return compose(compose(d, r[i]), di); };
    add(c, "D r1 D^-1 = r4 and D r2 D^-1 = r3", conj(0) == r[3] && conj(1) == r[2]);
    std::vector<GroupElement> aut = group(GroupName::WF4).elements();
    for (const GroupElement& g : group(GroupName::WF4)) aut.push_back(compose(d, g));
    std::sort(aut.begin(), aut.end());
    add(c, "Aut(F4) = W(F4) + D W(F4)", aut == group(GroupName::AutF4).elements());
  });
  guarded(out, "fixed axes", [](Checks& c) {
    const Quat one = Quat::identity();
    add(c, "W(B3R) fixes 1", std::all_of(group(GroupName::WB3R).begin(), group(GroupName::WB3R).end(),
                                         [&](const GroupElement& g) { return g(one) == one; }));
    const Quat axis = b3l_axis();
    const auto& b3l = group(GroupName::WB3L_C2);
    add(c, "W(B3L) x C2 fixes (1+e1)/sqrt2 up to sign",
        std::all_of(b3l.begin(), b3l.end(), [&](const GroupElement& g) {
          const Quat y = g(axis);
          return y == axis || y == -axis;
        }));
  });
  guarded(out, "coset decompositions", [](Checks& c) {
    const auto& w = group(GroupName::WF4);
    add(c, "W(F4) over W(B4): 3 cosets",
        coset_decompose(w, group(GroupName::WB4), CosetSide::Right).size() == 3);
    add(c, "W(F4) over W(B3R): 24 cosets",
        coset_decompose(w, group(GroupName::WB3R), CosetSide::Right).size() == 24);
    add(c, "O over V0: 6 cosets",
        coset_decompose(subset(SubsetName::O), subset(SubsetName::V0), CosetSide::Left).size() ==
            6);
  });
  guarded(out, "root data", [&](Checks& c) {
    const long n = static_cast<long>(f4.rank());
    bool dual = true;
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        dual &= scalar_product(f4.simple_roots[i], f4.weights[j]) == FieldScalar(i == j ? 1 : 0);
      }
    }
    add(c, "(alpha_i, w_j) = delta_ij for F4", dual);
    add(c, "Cartan times inverse is the identity",
        FieldMatrix(f4.cartan * f4.cartan_inv) == FieldMatrix::Identity(n, n));
    const FieldScalar s = FieldScalar::sqrt2();
    FieldMatrix inv(4, 4);
    inv << 2, 3, 2 * s, s, 3, 6, 4 * s, 2 * s, 2 * s, 4 * s, 6, 3, s, 2 * s, 3, 2;
    FieldMatrix gram_w(4, 4);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) gram_w(i, j) = scalar_product(f4.weights[i], f4.weights[j]);
    }
    add(c, "(w_i, w_j) equals the tabulated inverse Cartan matrix", gram_w == inv);
    add(c, "(alpha_i, alpha_j) equals the symmetric Cartan matrix", f4.gram == f4.cartan);
    const RootSystem& b3 = root_system(SystemName::B3R);
    const std::vector<Quat> v = {Quat(0, 1, 1, 1) / s, Quat(0, 1, 1, 0), Quat(0, 1, 0, 0)};
    bool b3dual = true;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        b3dual &= scalar_product(b3.simple_roots[i], v[j]) == FieldScalar(i == j ? 1 : 0);
      }
    }
    add(c, "B3R dual basis v1 = (e1+e2+e3)/sqrt2, v2 = e1+e2, v3 = e1", b3dual);
  });
  guarded(out, "generic branching formulas", [&](Checks& c) {
    std::mt19937_64 rng(seed);
    bool b4 = true;
    bool b3 = true;
    std::vector<std::size_t> misprinted;
    const auto formula = tables::b3a1_formula();
    for (int trial = 0; trial < 5; ++trial) {
      const OrbitLabel a = random_dominant(rng);
      std::set<OrbitLabel> printed;
      for (const OrbitLabel& part : tables::b4_formula(a)) printed.insert(part);
      const auto parts = branch_b4(a).parts;
      b4 &= std::set<OrbitLabel>(parts.begin(), parts.end()) == printed;
      const auto computed = slice_set(branch_b3a1(a));
      std::set<std::pair<OrbitLabel, FieldScalar>> corrected;
      for (std::size_t k = 0; k < formula.size(); ++k) {
        const auto& f = formula[k];
        const OrbitLabel lab = f.corrected_label ? (*f.corrected_label)(a) : f.label(a);
        const FieldScalar h = f.corrected_height ? (*f.corrected_height)(a) : f.height(a);
        corrected.emplace(lab, h);
        if (trial == 0 && !computed.count({f.label(a), f.height(a)})) misprinted.push_back(k + 1);
      }
      b3 &= computed == corrected;
    }
    add(c, "three-term B4 formula at random generic labels", b4);
    add(c, "twelve-family B3 x A1 formula at random generic labels (with corrections)", b3);
    std::string which;
    for (std::size_t k : misprinted) which += (which.empty() ? "" : ",") + std::to_string(k);
    add(c, "only slice families 6 and 9 differ as printed",
        misprinted == std::vector<std::size_t>{6, 9}, "differing families: " + which);
  });
  return out;
}

Checks criterion1() {
  Checks out;
  const std::vector<std::pair<GroupName, std::size_t>> want = {
      {GroupName::WF4, 1152}, {GroupName::AutF4, 2304},  {GroupName::WB4, 384},
      {GroupName::WB3R, 48},  {GroupName::WB3R_C2, 96},  {GroupName::WB3L_C2, 96}};
  for (auto [name, order] : want) {
    guarded(out, to_string(name), [&](Checks& c) {
      const std::size_t got = group(name).order();
      add(c, "|" + to_string(name) + "| = " + std::to_string(order), got == order,
          "computed " + std::to_string(got));
    });
  }
  return out;
}

Checks criterion2() {
  Checks out;
  guarded(out, "Table of block products", [](Checks& c) {
    const ProductTable got = subset_product_table();
    const auto want = tables::product_table();
    int matches = 0;
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) matches += got[i][j] == want[i][j];
    }
    add(c, "36 block products", matches == 36, std::to_string(matches) + "/36 entries match");
    bool table_rows = true;
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        for (const Quat& x : subset(kBlocks[i]).elements) {
          table_rows &= subset(want[i][j]).contains(x * subset(kBlocks[j]).elements.front());
        }
      }
    }
    add(c, "spot products land in the tabulated block", table_rows);
  });
  return out;
}

Checks criterion3() {
  Checks out;
  guarded(out, "Coxeter presentation", [](Checks& c) {
    const auto r = f4_generators();
    const int m[4][4] = {{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}};
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
      for (int j = i; j < 4; ++j) {
        const std::size_t got = i == j ? element_order(r[i]) : element_order(compose(r[i], r[j]));
        const std::size_t want = i == j ? 2 : m[i][j];
        if (got != want) {
          ok = false;
          detail += "order(r" + std::to_string(i + 1) + "r" + std::to_string(j + 1) + ")=" +
                    std::to_string(got) + " ";
        }
      }
    }
    add(c, "r_i^2 = 1, orders 3,4,3 on the chain, 2 elsewhere", ok, detail);
    const auto gens = f4_generators();
    add(c, "generators span the listed W(F4) set",
        generate(gens).elements() == group(GroupName::WF4).elements());
  });
  return out;
}

Checks criterion4() {
  Checks out;
  for (const tables::FVectorRow& row : tables::f_vectors()) {
    const std::string name = row.label.str();
    guarded(out, name, [&](Checks& c) {
      const PolytopeComplex pc = f_vector(SystemName::F4, row.label);
      std::ostringstream got;
      got << "(" << pc.n[0] << "," << pc.n[1] << "," << pc.n[2] << "," << pc.n[3] << ")";
      add(c, name + " Euler", pc.euler() == 0, "Euler characteristic " + std::to_string(pc.euler()));
      add(c, name + " f-vector", pc.n == row.n, "computed " + got.str());
      std::map<std::string, std::size_t> cells;
      for (const FaceClass& f : pc.cell_inventory) cells[f.shape] += f.count;
      std::map<std::string, std::size_t> want(row.cells.begin(), row.cells.end());
      std::string inv;
      for (auto [shape, n] : cells) inv += std::to_string(n) + " " + shape + "; ";
      add(c, name + " cell inventory", cells == want, inv);
    });
  }
  guarded(out, "24-cell text erratum", [](Checks& c) {
    const PolytopeComplex pc = f_vector(SystemName::F4, OrbitLabel{1, 0, 0, 0});
    const auto errata = tables::errata();
    const bool listed = std::any_of(errata.begin(), errata.end(),
                                    [](const tables::Erratum& e) { return e.printed == "240 faces"; });
    add(c, "printed \"240 faces\" reported as erratum", pc.n[2] != 240 && listed,
        "computed N2 = " + std::to_string(pc.n[2]));
  });
  return out;
}

Checks criterion5() {
  Checks out;
  const auto b4rows = tables::b4_decompositions();
  const auto b3rows = tables::b3a1_decompositions();
  for (const OrbitLabel& label : zero_one_labels()) {
    const std::string name = label.str();
    guarded(out, name, [&](Checks& c) {
      const B4Branching b4 = branch_b4(label);
      add(c, name + " B4 union equals the F4 orbit", b4_union_matches(b4));
      const auto row = std::find_if(b4rows.begin(), b4rows.end(),
                                    [&](const tables::B4Row& r) { return r.f4 == label; });
      std::set<OrbitLabel> want(row->parts.begin(), row->parts.end());
      add(c, name + " B4 table", std::set<OrbitLabel>(b4.parts.begin(), b4.parts.end()) == want,
          render(b4));

      const B3A1Branching b3 = branch_b3a1(label);
      add(c, name + " B3 x A1 union equals the F4 orbit", b3a1_union_matches(b3));
      std::size_t total = 0;
      for (const B3Slice& s : b3.slices) total += slice_vertex_count(s);
      const std::size_t n0 = generate_orbit(SystemName::F4, label).vertices.size();
      add(c, name + " slice counts sum to N0", total == n0,
          std::to_string(total) + " vs " + std::to_string(n0));
      const auto row3 = std::find_if(b3rows.begin(), b3rows.end(),
                                     [&](const tables::B3A1Row& r) { return r.f4 == label; });
      std::set<std::pair<OrbitLabel, FieldScalar>> want3;
      for (const auto& s : row3->slices) want3.emplace(s.b3, s.height);
      add(c, name + " B3 x A1 table", slice_set(b3) == want3, render(b3));
    });
  }
  return out;
}

Checks criterion6() {
  Checks out;
  const FieldScalar s = FieldScalar::sqrt2();
  auto lifted = [&](const OrbitLabel& label) {
    std::vector<std::vector<Quat>> family;
    for (const ProjectedSlice& slice : project_3d(label)) {
      std::vector<Quat> pts;
      for (const Point3& p : slice.points) pts.push_back(lift(slice.height, p) / s);
      family.push_back(pts);
    }
    return paired(family);
  };
  auto scaled = [&](const B3A1Branching& b) {
    std::set<std::pair<OrbitLabel, FieldScalar>> out;
    for (const B3Slice& sl : b.slices) {
      OrbitLabel l = sl.b3_label;
      for (std::size_t i = 0; i < l.rank(); ++i) l[i] = l[i] / s;
      out.emplace(l, sl.height / s);
    }
    return out;
  };
  guarded(out, "24-cell", [&](Checks& c) {
    const std::set<std::pair<OrbitLabel, FieldScalar>> want = {
        {OrbitLabel{0, 0, 0}, FieldScalar(1) / s},
        {OrbitLabel{0, 0, 1}, FieldScalar(0)},
        {OrbitLabel{FieldScalar(1) / s, 0, 0}, FieldScalar(1) / (2 * s)}};
    add(c, "T = {(0,0,0) ± 1/sqrt2} + {(0,0,1) ± 0} + {(1,0,0)/sqrt2 ± 1/(2sqrt2)}",
        scaled(branch_b3a1(OrbitLabel{1, 0, 0, 0})) == want);
    add(c, "T sliced into poles, octahedron and two cubes",
        lifted(OrbitLabel{1, 0, 0, 0}) == paired(tables::t_slices()));
  });
  guarded(out, "dual 24-cell", [&](Checks& c) {
    const std::set<std::pair<OrbitLabel, FieldScalar>> want = {
        {OrbitLabel{0, 0, FieldScalar(1) / s}, FieldScalar::fraction(1, 2)},
        {OrbitLabel{0, FieldScalar(1) / s, 0}, FieldScalar(0)}};
    add(c, "T' = {(0,0,1)/sqrt2 ± 1/2} + {(0,1,0)/sqrt2 ± 0}",
        scaled(branch_b3a1(OrbitLabel{0, 0, 0, 1})) == want);
    add(c, "T' sliced into two octahedra and a cuboctahedron",
        lifted(OrbitLabel{0, 0, 0, 1}) == paired(tables::t_prime_slices()));
  });
  return out;
}

Checks criterion7() {
  Checks out;
  for (const tables::ScaleRow& row : tables::dual_scales()) {
    const std::string name = row.label.str();
    guarded(out, name, [&](Checks& c) {
      const auto scales = solve_scales(row.label, cells_at_vertex(row.label));
      std::map<int, FieldScalar> want;
      for (const auto& [node, _] : scales) want[node] = FieldScalar(1);
      for (const auto& [node, value] : row.scales) want[node] = value;
      std::string got;
      for (const auto& [node, value] : scales) {
        got += "w" + std::to_string(node + 1) + ":" + value.pretty() + " ";
      }
      add(c, name + " scales", scales == want, got);
      const Quat lambda = label_to_vector(root_system(SystemName::F4), row.label);
      std::set<FieldScalar> heights;
      for (const CenterVector& cv : dual_cell_local(row.label).centers) {
        heights.insert(scalar_product(cv.point(), lambda));
      }
      add(c, name + " centers share one hyperplane orthogonal to the vertex", heights.size() == 1);
    });
  }
  return out;
}

Checks criterion8() {
  Checks out;
  guarded(out, "(0,1,0,0) radius ratio", [](Checks& c) {
    const auto r2 = dual_polytope(OrbitLabel{0, 1, 0, 0}).vertex_orbits;
    FieldScalar r1, r4;
    for (const DualShell& s : r2) (s.weight == 0 ? r1 : r4) = s.radius2;
    const FieldScalar want = tables::bipyramid_radius_ratio();
    const double ratio = std::sqrt((r4 / r1).to_double());
    add(c, "(0,1,0,0) R4/R1 = 3/(2sqrt2)",
        r4 / r1 == want * want && std::abs(ratio - want.to_double()) <= 1e-9,
        "R4/R1 = " + fmt(ratio, 17));
  });
  for (const tables::RadiusRow& row : tables::dual_radii()) {
    guarded(out, row.label.str() + " radii", [&](Checks& c) {
      const DualPolytope d = dual_polytope(row.label);
      bool ok = true;
      std::string detail;
      for (auto [node, r] : row.radii) {
        const auto it = std::find_if(d.vertex_orbits.begin(), d.vertex_orbits.end(),
                                     [&](const DualShell& s) { return s.weight == node; });
        const double got = it == d.vertex_orbits.end() ? NAN : std::sqrt(it->radius2.to_double());
        ok &= std::abs(got - r) <= row.tolerance;
        detail += "R" + std::to_string(node + 1) + "=" + fmt(got) + " ";
      }
      add(c, row.label.str() + " shell radii within " + fmt(row.tolerance), ok, detail);
    });
  }
  guarded(out, "(0,1,1,0) single shell", [](Checks& c) {
    const DualPolytope d = dual_polytope(OrbitLabel{0, 1, 1, 0});
    const auto r = d.radii2();
    add(c, "(0,1,1,0) dual: 48 vertices on one shell of radius^2 2",
        d.n0 == 48 && std::all_of(r.begin(), r.end(), [](const FieldScalar& x) { return x == 2; }));
  });
  for (const tables::CellTable& t : tables::dual_cells()) {
    guarded(out, t.label.str() + " cell", [&](Checks& c) {
      const DualCell cell = dual_cell_local(t.label);
      const auto k = proportional_sets(cell.local_coords, points_of(t, true));
      bool corrections = std::any_of(t.rows.begin(), t.rows.end(),
                                     [](const tables::CellRow& r) { return r.corrected.has_value(); });
      add(c, t.label.str() + " dual-cell coordinates proportional" +
                 (corrections ? " (after listed corrections)" : ""),
          k.has_value(), k ? "scale " + k->pretty() : "no common scale");
    });
  }
  guarded(out, "small cells", [](Checks& c) {
    auto lengths = [](const OrbitLabel& l) { return cell_metrics(dual_cell_local(l)).edge_lengths2; };
    add(c, "(0,1,0,0) bipyramid sides^2 {10/9, 2}",
        lengths(OrbitLabel{0, 1, 0, 0}) ==
            std::vector<FieldScalar>{FieldScalar::fraction(10, 9), FieldScalar(2)});
    add(c, "(1,1,0,0) pyramid sides^2 {26/25, 2}",
        lengths(OrbitLabel{1, 1, 0, 0}) ==
            std::vector<FieldScalar>{FieldScalar::fraction(26, 25), FieldScalar(2)});
    add(c, "(0,1,1,0) cell sides^2 {4-2sqrt2, 2}",
        lengths(OrbitLabel{0, 1, 1, 0}) ==
            std::vector<FieldScalar>{FieldScalar(4) - 2 * FieldScalar::sqrt2(), FieldScalar(2)});
  });
  guarded(out, "trapezohedron kites", [](Checks& c) {
    const OrbitLabel label{1, 0, 0, 1};
    const DualCell cell = dual_cell_local(label);
    const auto k = proportional_sets(cell.local_coords, points_of(cell_table(label), true));
    if (!k) throw std::logic_error("no common scale for the trapezohedron");
    const CellMetrics printed_units = cell_metrics(with_coordinate_scale(cell, *k));
    const CellMetrics true_units = cell_metrics(cell);
    const tables::Kite kite = tables::trapezohedron_kite();
    const std::vector<FieldScalar> want = {kite.long_side2, kite.long_side2, kite.short_side2,
                                           kite.short_side2};
    bool sides = printed_units.faces.size() == 8;
    for (const FaceMetrics& f : printed_units.faces) {
      auto s = f.sides2;
      std::sort(s.begin(), s.end(), std::greater<>());
      sides &= s == want;
    }
    add(c, "kite sides^2 are 16-10sqrt2 and 80-56sqrt2 exactly", sides,
        std::to_string(printed_units.faces.size()) + " faces");
    const double a_true = true_units.faces.front().area;
    const double a_printed = printed_units.faces.front().area;
    const bool ok = std::abs(a_true - kite.area) <= kite.area_tolerance ||
                    std::abs(a_printed - kite.area) <= kite.area_tolerance;
    add(c, "kite area 0.934 within 1e-3", ok,
        "computed " + fmt(a_true, 8) + " in true units, " + fmt(a_printed, 8) +
            " in printed coordinate units");
  });
  return out;
}

Checks criterion9() {
  Checks out;
  guarded(out, "self-duality", [](Checks& c) {
    const OrbitLabel label{1, 0, 0, 0};
    const auto types = cells_at_vertex(label);
    std::vector<Quat> centers;
    for (const CellType& t : types) {
      for (const CenterVector& cv : t.centers) centers.push_back(cv.point());
    }
    std::vector<Quat> want;
    const auto rows = tables::octahedra_at_one();
    for (const auto& row : rows) want.push_back(row.center);
    add(c, "six octahedron centers at the vertex are 1 ± e_i",
        types.size() == 1 && sorted(centers) == sorted(want));
    bool octahedra = true;
    const auto& t = subset(SubsetName::T).elements;
    for (const auto& row : rows) {
      std::vector<Quat> nearest;
      for (const Quat& v : t) {
        if (scalar_product(v, row.center) == 1) nearest.push_back(v);
      }
      octahedra &= sorted(nearest) == sorted(row.vertices);
    }
    add(c, "each center sees exactly its six tabulated octahedron vertices", octahedra);
    const DualPolytope d = dual_polytope(label);
    const auto dual = dual_vertices(d);
    const Orbit other = generate_orbit(SystemName::F4, OrbitLabel{0, 0, 0, 1});
    const auto k = exact_sqrt(norm2(dual.front()) / norm2(other.vertices.front()));
    std::vector<Quat> scaled;
    if (k) {
      for (const Quat& v : other.vertices) scaled.push_back(v * *k);
    }
    add(c, "dual vertex set equals a scaled (0,0,0,1) orbit", k && sorted(scaled) == dual,
        k ? "scale " + k->pretty() : "no exact scale");
  });
  return out;
}

Checks criterion10(std::uint64_t seed) {
  Checks out;
  guarded(out, "orbit-stabilizer", [](Checks& c) {
    bool ok = true;
    for (const OrbitLabel& l : zero_one_labels()) {
      ok &= generate_orbit(SystemName::F4, l).vertices.size() * stabilizer_order(SystemName::F4, l) ==
            1152;
    }
    add(c, "|orbit| x |stabilizer| = 1152 for all 15 labels", ok);
  });
  guarded(out, "reflections", [&](Checks& c) {
    std::mt19937_64 rng(seed);
    int involution = 0;
    int agreement = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      Quat alpha = random_quat(rng);
      while (alpha.is_zero()) alpha = random_quat(rng);
      const Quat lambda = random_quat(rng);
      const Quat r = reflect(alpha, lambda);
      involution += reflect(alpha, r) == lambda;
      agreement += r == reflect_classical(alpha, lambda);
    }
    add(c, "reflection is an involution on 1000 seeded inputs", involution == 1000,
        std::to_string(involution) + "/1000");
    add(c, "quaternionic and classical reflections agree on 1000 seeded inputs",
        agreement == 1000, std::to_string(agreement) + "/1000");
  });
  guarded(out, "edge oracle", [](Checks& c) {
    bool ok = true;
    std::string detail;
    for (const tables::FVectorRow& row : tables::f_vectors()) {
      const PolytopeComplex pc = f_vector(SystemName::F4, row.label);
      const std::size_t geometric = geometric_edge_check(pc.orbit);
      if (geometric != pc.n[1]) {
        ok = false;
        detail += row.label.str() + ": " + std::to_string(geometric) + " vs " +
                  std::to_string(pc.n[1]) + " ";
      }
    }
    add(c, "geometric edge count equals N1 on all nine polytopes", ok, detail);
  });
  return out;
}

Checks errata_evidence(std::uint64_t seed) {
  Checks out;
  guarded(out, "24-cell faces", [](Checks& c) {
    const auto n = f_vector(SystemName::F4, OrbitLabel{1, 0, 0, 0}).n;
    add(c, "24-cell: Euler rules out 240 faces", 24 - 96 + 240 - 24 != 0 && n[2] == 96);
  });
  guarded(out, "slice families", [&](Checks& c) {
    std::mt19937_64 rng(seed ^ 0x5bd1e995u);
    const OrbitLabel a = random_dominant(rng);
    const RootSystem& f4 = root_system(SystemName::F4);
    const RootSystem& b3 = root_system(SystemName::B3R);
    const FieldScalar radius2 = norm2(label_to_vector(f4, a));
    auto on_sphere = [&](const OrbitLabel& lab, const FieldScalar& h) {
      return 2 * h * h + norm2(label_to_vector(b3, lab)) == radius2;
    };
    const auto f = tables::b3a1_formula();
    add(c, "family 6 as printed is off the sphere, corrected is on it",
        !on_sphere(f[5].label(a), f[5].height(a)) &&
            on_sphere(f[5].label(a), (*f[5].corrected_height)(a)));
    add(c, "family 9 as printed is off the sphere, corrected is on it",
        !on_sphere(f[8].label(a), f[8].height(a)) &&
            on_sphere((*f[8].corrected_label)(a), f[8].height(a)));
  });
  guarded(out, "frame normalizers", [](Checks& c) {
    for (const tables::CellTable& t : tables::dual_cells()) {
      if (!t.p0) continue;
      const auto& [numerator, printed] = *t.p0;
      const Quat lambda = label_to_vector(root_system(SystemName::F4), t.label);
      const bool parallel = exact_rank({numerator, lambda}) == 1;
      const FieldScalar n2 = norm2(numerator);
      const bool erratum = t.label == OrbitLabel{1, 0, 1, 0};
      add(c, t.label.str() + " p0 numerator parallel to the vertex, |.|^2 " +
                 (erratum ? "differs from print" : "matches print"),
          parallel && (n2 == printed) != erratum, "|numerator|^2 = " + n2.pretty());
    }
  });
  guarded(out, "trapezohedron rows", [](Checks& c) {
    const OrbitLabel label{1, 0, 0, 1};
    const auto& t = cell_table(label);
    Point3 sum = Point3::Constant(FieldScalar(0));
    for (const auto& row : t.rows) {
      if (row.name.find("w2") != std::string::npos) sum += row.printed;
    }
    const DualCell cell = dual_cell_local(label);
    add(c, "printed w2 rows are not a fourfold orbit about p1",
        !(sum(1).is_zero() && sum(2).is_zero()));
    add(c, "printed rows are not proportional, corrected rows are",
        !proportional_sets(cell.local_coords, points_of(t, false)) &&
            proportional_sets(cell.local_coords, points_of(t, true)));
  });
  guarded(out, "(1,1,1,0) row", [](Checks& c) {
    const OrbitLabel label{1, 1, 1, 0};
    const auto& t = cell_table(label);
    const DualCell cell = dual_cell_local(label);
    const auto k = proportional_sets(cell.local_coords, points_of(t, true));
    add(c, "printed rows are not proportional, corrected rows are",
        !proportional_sets(cell.local_coords, points_of(t, false)) && k.has_value());
    const auto row = std::find_if(t.rows.begin(), t.rows.end(),
                                  [](const tables::CellRow& r) { return r.corrected.has_value(); });
    const Point3& p = row->printed;
    const Point3& q = *row->corrected;
    add(c, "printed rho w2 row has the wrong length",
        squared_length(p(0), p(1), p(2)) != squared_length(q(0), q(1), q(2)));
  });
  return out;
}

const char* title(int n) {
  switch (n) {
    case 0: return "structural invariants";
    case 1: return "group orders";
    case 2: return "block multiplication table";
    case 3: return "Coxeter presentation";
    case 4: return "orbit sizes and f-vectors";
    case 5: return "branching ground truth";
    case 6: return "worked projections";
    case 7: return "dual scale factors";
    case 8: return "dual geometry";
    case 9: return "self-duality of the 24-cell";
    case 10: return "property suites";
    case 11: return "errata evidence";
  }
  return "";
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string Report::failures() const {
  std::string out;
  for (const Check& c : checks) {
    if (!c.passed) out += (out.empty() ? "" : ", ") + c.name;
  }
  return out;
}

Report run_report(int number, std::uint64_t seed) {
  Report r{number, title(number), {}};
  switch (number) {
    case 0: r.checks = invariants(seed); break;
    case 1: r.checks = criterion1(); break;
    case 2: r.checks = criterion2(); break;
    case 3: r.checks = criterion3(); break;
    case 4: r.checks = criterion4(); break;
    case 5: r.checks = criterion5(); break;
    case 6: r.checks = criterion6(); break;
    case 7: r.checks = criterion7(); break;
    case 8: r.checks = criterion8(); break;
    case 9: r.checks = criterion9(); break;
    case 10: r.checks = criterion10(seed); break;
    case 11: r.checks = errata_evidence(seed); break;
    default: throw std::out_of_range("no report number " + std::to_string(number));
  }
  return r;
}

std::vector<Report> run_all(std::uint64_t seed) {
  std::vector<Report> out;
  for (int n = 0; n <= kErrata; ++n) out.push_back(run_report(n, seed));
  return out;
}

std::string render(const Report& r, bool verbose) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : "FAIL") << " [" << r.number << "] " << r.title << " ("
     << r.checks.size() << " checks)";
  if (!r.passed()) os << ": failed " << r.failures();
  os << "\n";
  for (const Check& c : r.checks) {
    if (!verbose && c.passed) continue;
    os << "    " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace f4
