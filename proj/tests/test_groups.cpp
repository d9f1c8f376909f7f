#include <doctest.h>

#include "support.hpp"

#include "f4/group.hpp"
#include "f4/orbit.hpp"
#include "f4/quaternion_sets.hpp"
#include "f4/tables.hpp"

#include <set>

using namespace f4;

namespace {

// Generic point of the fundamental chamber; its reflection orbit is the regular orbit.
Quat generic_vector(SystemName sys) {
  const RootSystem& rs = root_system(sys);
  OrbitLabel label(std::vector<FieldScalar>(rs.rank(), FieldScalar(0)));
  for (std::size_t i = 0; i < rs.rank(); ++i) label[i] = FieldScalar(static_cast<long>(i + 1)) + FieldScalar::fraction(1, 3);
  return label_to_vector(rs, label);
}

}  // namespace

TEST_CASE("block sizes") {
  for (SubsetName b : kBlocks) CHECK(subset(b).size() == 8);
  CHECK(subset(SubsetName::T).size() == 24);
  CHECK(subset(SubsetName::Tprime).size() == 24);
  CHECK(subset(SubsetName::O).size() == 48);
  for (const Quat& q : subset(SubsetName::O).elements) CHECK(norm2(q) == 1);
}

TEST_CASE("every product of block elements lands in the tabulated block") {
  const auto table = tables::product_table();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      for (const Quat& x : subset(kBlocks[i]).elements) {
        for (const Quat& y : subset(kBlocks[j]).elements) {
          REQUIRE(subset(table[i][j]).contains(x * y));
        }
      }
    }
  }
  // The quotient by V0 is a non-abelian group of order six with V0 as identity.
  for (int i = 0; i < 6; ++i) {
    CHECK(table[0][i] == kBlocks[i]);
    CHECK(table[i][0] == kBlocks[i]);
    std::set<SubsetName> row(table[i].begin(), table[i].end());
    CHECK(row.size() == 6);
  }
  CHECK(table[1][3] != table[3][1]);
  CHECK(subset_product_table() == table);
}

TEST_CASE("group orders agree with regular reflection orbits") {
  CHECK(group(GroupName::WF4).order() == reflection_orbit(root_system(SystemName::F4), generic_vector(SystemName::F4)).size());
  CHECK(group(GroupName::WB4).order() == reflection_orbit(root_system(SystemName::B4), generic_vector(SystemName::B4)).size());
  CHECK(group(GroupName::WB3R).order() == reflection_orbit(root_system(SystemName::B3R), generic_vector(SystemName::B3R)).size());
  CHECK(group(GroupName::WF4).order() == 1152);
  CHECK(group(GroupName::AutF4).order() == 2304);
  CHECK(group(GroupName::WB4).order() == 384);
  CHECK(group(GroupName::WB3R).order() == 48);
  CHECK(group(GroupName::WB3R_C2).order() == 96);
  CHECK(group(GroupName::WB3L_C2).order() == 96);
}

TEST_CASE("subgroups sit inside W(F4) and W(F4) permutes the roots") {
  const auto& w = group(GroupName::WF4);
  for (GroupName sub : {GroupName::WB4, GroupName::WB3R, GroupName::WB3R_C2, GroupName::WB3L_C2}) {
    for (const GroupElement& g : group(sub)) REQUIRE(w.contains(g));
  }
  const RootSystem& f4 = root_system(SystemName::F4);
  std::vector<Quat> roots = reflection_orbit(f4, f4.simple_roots[0]);
  const auto short_roots = reflection_orbit(f4, f4.simple_roots[3]);
  roots.insert(roots.end(), short_roots.begin(), short_roots.end());
  std::sort(roots.begin(), roots.end());
  CHECK(roots.size() == 48);
  for (const GroupElement& g : w) {
    std::vector<Quat> image;
    for (const Quat& r : roots) image.push_back(g(r));
    std::sort(image.begin(), image.end());
    REQUIRE(image == roots);
  }
}

TEST_CASE("random products stay in the group") {
  std::mt19937_64 rng(test::seed() + 10);
  INFO(test::seed_note());
  const auto& w = group(GroupName::WF4);
  const auto& elems = w.elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const GroupElement& g = elems[pick(rng)];
    const GroupElement& h = elems[pick(rng)];
    REQUIRE(w.contains(compose(g, h)));
    REQUIRE(compose(g, inverse(g)) == GroupElement::identity());
    const Quat x = test::random_quat(rng);
    REQUIRE(compose(g, h)(x) == g(h(x)));
    REQUIRE(norm2(g(x)) == norm2(x));
  }
}

TEST_CASE("generators, relations and cosets") {
  const auto r = f4_generators();
  REQUIRE(r.size() == 4);
  const RootSystem& f4 = root_system(SystemName::F4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      GroupElement x = i == j ? r[i] : compose(r[i], r[j]);
      int order = 1;
      while (!(x == GroupElement::identity())) {
        x = compose(x, i == j ? r[i] : compose(r[i], r[j]));
        ++order;
      }
      CHECK(order == (i == j ? 2 : f4.coxeter_m(i, j)));
    }
  }
  CHECK(f4.coxeter_m(0, 1) == 3);
  CHECK(f4.coxeter_m(1, 2) == 4);
  CHECK(f4.coxeter_m(2, 3) == 3);
  CHECK(f4.coxeter_m(0, 3) == 2);
  const auto gens = f4_generators();
  CHECK(generate(gens).elements() == group(GroupName::WF4).elements());
  CHECK(coset_decompose(group(GroupName::WF4), group(GroupName::WB4), CosetSide::Left).size() == 3);
  CHECK(coset_decompose(group(GroupName::AutF4), group(GroupName::WF4), CosetSide::Left).size() == 2);
  CHECK_THROWS_AS(coset_decompose(group(GroupName::WB4), group(GroupName::WF4), CosetSide::Left),
                  std::invalid_argument);
}
