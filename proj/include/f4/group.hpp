#pragma once

#include "f4/quaternion.hpp"
#include "f4/quaternion_sets.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace f4 {

/// Orthogonal map [p, q]: x -> p x q, or [p, q]*: x -> p conj(x) q, for unit p, q.
/// Stored with the first nonzero coefficient of p positive, since [p, q] = [-p, -q].
class GroupElement {
 public:
  GroupElement() : GroupElement(Quat::identity(), Quat::identity(), false) {}
  GroupElement(const Quat& p, const Quat& q, bool star);

  static GroupElement identity() { return {}; }

  const Quat& p() const { return p_; }
  const Quat& q() const { return q_; }
  bool star() const { return star_; }

  Quat operator()(const Quat& x) const { return star_ ? p_ * conjugate(x) * q_ : p_ * x * q_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  /// Lexicographic on (star, p, q).
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  Quat p_;
  Quat q_;
  bool star_ = false;
};

Quat act(const GroupElement& g, const Quat& x);
/// (g o h)(x) = g(h(x)).
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
/// Reflection -alpha conj(x) alpha / (alpha, alpha) as [-a, a]* with a = alpha / |alpha|.
/// Throws std::invalid_argument when |alpha| is not in the field.
GroupElement reflection(const Quat& alpha);

std::string to_string(const GroupElement& g);
std::size_t hash_value(const GroupElement& g);

}  // namespace f4

template <>
struct std::hash<f4::GroupElement> {
  std::size_t operator()(const f4::GroupElement& g) const { return f4::hash_value(g); }
};

namespace f4 {

enum class GroupName { WF4, AutF4, WB4, WB3R_C2, WB3L_C2, WB3R, Generated };

std::string to_string(GroupName name);

/// Immutable finite group of GroupElements kept in sorted order.
class FiniteGroup {
 public:
  FiniteGroup(GroupName name, std::vector<GroupElement> elements);

  GroupName name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  bool contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }

 private:
  GroupName name_;
  std::vector<GroupElement> elements_;
};

/// Assembles a named group from its quaternion blocks, then checks order and closure.
/// Throws std::logic_error on any structural mismatch.
FiniteGroup build_group(GroupName name);
/// Cached, shared instance of build_group(name).
const FiniteGroup& group(GroupName name);

/// Group generated by gens (breadth-first closure).
FiniteGroup generate(std::span<const GroupElement> gens, GroupName name = GroupName::Generated);

/// Closure test: grows a generating subset of the elements and compares its span.
bool is_closed(std::span<const GroupElement> elements);
/// Closure test over all pairs; quadratic, intended for small sets.
bool is_closed_exhaustive(std::span<const GroupElement> elements);

/// Simple reflections r1..r4 generating W(F4).
std::vector<GroupElement> f4_generators();
/// The diagram automorphism [-(e2 + e3)/sqrt2, e2] exchanging r1 <-> r4 and r2 <-> r3.
GroupElement diagram_automorphism();
/// Axis fixed by W(B3L) x C2, the quaternion (1 + e1)/sqrt2.
Quat b3l_axis();

enum class CosetSide { Left, Right };

/// Lexicographically least representative of each coset g H (Left) or H g (Right),
/// in ascending order. Throws std::invalid_argument if small is not a subgroup of big.
template <typename Element, typename Compose>
std::vector<Element> coset_decompose(std::span<const Element> big, std::span<const Element> small,
                                     CosetSide side, Compose compose_fn) {
  std::vector<Element> sorted(big.begin(), big.end());
  std::sort(sorted.begin(), sorted.end());
  if (small.empty() || sorted.size() % small.size() != 0)
    throw std::invalid_argument("coset decomposition: order does not divide");
  std::unordered_set<Element> members(sorted.begin(), sorted.end());
  for (const Element& h : small) {
    if (!members.count(h)) throw std::invalid_argument("coset decomposition: not a subset");
  }
  std::unordered_set<Element> seen;
  std::vector<Element> reps;
  for (const Element& g : sorted) {
    if (seen.count(g)) continue;
    reps.push_back(g);
    for (const Element& h : small) {
      Element x = side == CosetSide::Left ? compose_fn(g, h) : compose_fn(h, g);
      if (!members.count(x)) throw std::invalid_argument("coset decomposition: not closed");
      if (!seen.insert(x).second) throw std::invalid_argument("coset decomposition: overlap");
    }
  }
  if (reps.size() * small.size() != sorted.size())
    throw std::invalid_argument("coset decomposition: cosets do not tile");
  return reps;
}

std::vector<GroupElement> coset_decompose(const FiniteGroup& big, const FiniteGroup& small,
                                          CosetSide side);
std::vector<Quat> coset_decompose(const QuaternionSet& big, const QuaternionSet& small,
                                  CosetSide side);

}  // namespace f4
