#include "f4/quaternion_sets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace f4 {

namespace {

QuaternionSet make_set(SubsetName name, std::vector<Quat> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return {name, std::move(elements)};
}

// All sign choices of (x e_a + y e_b) / sqrt2 for the pairs (a, b) and (c, d).
std::vector<Quat> sqrt2_block(int a, int b, int c, int d) {
  const FieldScalar h = FieldScalar::sqrt2() / 2;
  std::vector<Quat> out;
  for (auto [i, j] : {std::pair{a, b}, std::pair{c, d}}) {
    for (int si : {1, -1}) {
      for (int sj : {1, -1}) {
        Quat q;
        q[i] = h * si;
        q[j] = h * sj;
        out.push_back(q);
      }
    }
  }
  return out;
}

std::vector<Quat> half_block(bool even_plus) {
  const FieldScalar half = FieldScalar::fraction(1, 2);
  std::vector<Quat> out;
  for (int mask = 0; mask < 16; ++mask) {
    const int plus = __builtin_popcount(static_cast<unsigned>(mask));
    if ((plus % 2 == 0) != even_plus) continue;
    Quat q;
    for (int i = 0; i < 4; ++i) q[i] = (mask >> i & 1) ? half : -half;
    out.push_back(q);
  }
  return out;
}

std::vector<Quat> unite(std::initializer_list<const std::vector<Quat>*> parts) {
  std::vector<Quat> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

std::string to_string(SubsetName name) {
  switch (name) {
    case SubsetName::V0: return "V0";
    case SubsetName::Vplus: return "V+";
    case SubsetName::Vminus: return "V-";
    case SubsetName::V1: return "V1";
    case SubsetName::V2: return "V2";
    case SubsetName::V3: return "V3";
    case SubsetName::T: return "T";
    case SubsetName::Tprime: return "T'";
    case SubsetName::O: return "O";
  }
  return "?";
}

bool QuaternionSet::contains(const Quat& q) const {
  return std::binary_search(elements.begin(), elements.end(), q);
}

std::vector<QuaternionSet> build_subsets() {
  std::vector<Quat> v0;
  for (int i = 0; i < 4; ++i) {
    v0.push_back(Quat::unit(i));
    v0.push_back(-Quat::unit(i));
  }
  // V+ collects 1/2(+-1 +-e1 +-e2 +-e3) with an even number of plus signs.
  const std::vector<Quat> vplus = half_block(true);
  std::vector<Quat> vminus;
  for (const Quat& q : vplus) vminus.push_back(conjugate(q));
  const std::vector<Quat> v1 = sqrt2_block(0, 1, 2, 3);
  const std::vector<Quat> v2 = sqrt2_block(0, 2, 3, 1);
  const std::vector<Quat> v3 = sqrt2_block(0, 3, 1, 2);

  std::vector<QuaternionSet> sets = {
      make_set(SubsetName::V0, v0),
      make_set(SubsetName::Vplus, vplus),
      make_set(SubsetName::Vminus, vminus),
      make_set(SubsetName::V1, v1),
      make_set(SubsetName::V2, v2),
      make_set(SubsetName::V3, v3),
      make_set(SubsetName::T, unite({&v0, &vplus, &vminus})),
      make_set(SubsetName::Tprime, unite({&v1, &v2, &v3})),
      make_set(SubsetName::O, unite({&v0, &vplus, &vminus, &v1, &v2, &v3})),
  };
  for (const auto& s : sets) {
    const std::size_t want = s.name == SubsetName::O                                 ? 48
                             : (s.name == SubsetName::T || s.name == SubsetName::Tprime) ? 24
                                                                                         : 8;
    if (s.size() != want) throw std::logic_error("subset " + to_string(s.name) + " has wrong size");
    for (const Quat& q : s.elements) {
      if (norm2(q) != FieldScalar(1)) throw std::logic_error("subset element is not a unit");
    }
  }
  return sets;
}

const QuaternionSet& subset(SubsetName name) {
  static const std::vector<QuaternionSet> sets = build_subsets();
  return sets[static_cast<std::size_t>(name)];
}

SubsetName block_of(const Quat& q) {
  for (SubsetName b : kBlocks) {
    if (subset(b).contains(q)) return b;
  }
  throw std::invalid_argument("quaternion " + to_string(q) + " lies in no block");
}

ProductTable subset_product_table() {
  ProductTable table{};
  for (std::size_t i = 0; i < kBlocks.size(); ++i) {
    for (std::size_t j = 0; j < kBlocks.size(); ++j) {
      const auto& a = subset(kBlocks[i]).elements;
      const auto& b = subset(kBlocks[j]).elements;
      const SubsetName target = block_of(a.front() * b.front());
      for (const Quat& x : a) {
        for (const Quat& y : b) {
          if (!subset(target).contains(x * y)) {
            throw std::logic_error("block product " + to_string(kBlocks[i]) + "*" +
                                   to_string(kBlocks[j]) + " is not a single block");
          }
        }
      }
      table[i][j] = target;
    }
  }
  return table;
}

}  // namespace f4
