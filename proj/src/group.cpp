#include "f4/group.hpp"

#include <deque>
#include <memory>
#include <mutex>

namespace f4 {

namespace {

Quat canonical_sign(const Quat& p, bool& flip) {
  flip = false;
  for (int i = 0; i < 4; ++i) {
    if (p[i].is_zero()) continue;
    flip = p[i].sign() < 0;
    break;
  }
  return flip ? -p : p;
}

std::vector<GroupElement> block_product(SubsetName a, SubsetName b, bool also_star) {
  std::vector<GroupElement> out;
  for (const Quat& p : subset(a).elements) {
    for (const Quat& q : subset(b).elements) {
      out.emplace_back(p, q, false);
      if (also_star) out.emplace_back(p, q, true);
    }
  }
  return out;
}

std::vector<GroupElement> assemble(GroupName name) {
  std::vector<GroupElement> out;
  auto add = [&out](std::vector<GroupElement> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  const auto& o = subset(SubsetName::O).elements;
  switch (name) {
    case GroupName::WF4:
      add(block_product(SubsetName::T, SubsetName::T, true));
      add(block_product(SubsetName::Tprime, SubsetName::Tprime, true));
      break;
    case GroupName::AutF4:
      add(block_product(SubsetName::O, SubsetName::O, true));
      break;
    case GroupName::WB4: {
      const std::pair<SubsetName, SubsetName> pairs[] = {
          {SubsetName::V0, SubsetName::V0},    {SubsetName::Vplus, SubsetName::Vminus},
          {SubsetName::Vminus, SubsetName::Vplus}, {SubsetName::V1, SubsetName::V1},
          {SubsetName::V2, SubsetName::V2},    {SubsetName::V3, SubsetName::V3}};
      for (auto [a, b] : pairs) add(block_product(a, b, true));
      break;
    }
    case GroupName::WB3R:
      for (const Quat& p : o) {
        out.emplace_back(p, conjugate(p), false);
        out.emplace_back(p, conjugate(p), true);
      }
      break;
    case GroupName::WB3R_C2:
      for (const Quat& p : o) {
        for (int s : {1, -1}) {
          out.emplace_back(p, conjugate(p) * FieldScalar(s), false);
          out.emplace_back(p, conjugate(p) * FieldScalar(s), true);
        }
      }
      break;
    case GroupName::WB3L_C2: {
      const Quat q = b3l_axis();
      for (const Quat& p : o) {
        for (int s : {1, -1}) {
          out.emplace_back(p, conjugate(q) * conjugate(p) * q * FieldScalar(s), false);
          out.emplace_back(p, q * conjugate(p) * q * FieldScalar(s), true);
        }
      }
      break;
    }
    case GroupName::Generated:
      throw std::invalid_argument("build_group needs a named group");
  }
  return out;
}

std::size_t expected_order(GroupName name) {
  switch (name) {
    case GroupName::WF4: return 1152;
    case GroupName::AutF4: return 2304;
    case GroupName::WB4: return 384;
    case GroupName::WB3R_C2: return 96;
    case GroupName::WB3L_C2: return 96;
    case GroupName::WB3R: return 48;
    case GroupName::Generated: return 0;
  }
  return 0;
}

}  // namespace

GroupElement::GroupElement(const Quat& p, const Quat& q, bool star) : star_(star) {
  bool flip = false;
  p_ = canonical_sign(p, flip);
  q_ = flip ? -q : q;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.star_ <=> b.star_; c != 0) return c;
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  return a.q_ <=> b.q_;
}

Quat act(const GroupElement& g, const Quat& x) { return g(x); }

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  // [p,q] o [r,s] = [pr, sq];  [p,q]* o [r,s] = [p conj(s), conj(r) q]*, and likewise with h starred.
  if (!g.star()) return {g.p() * h.p(), h.q() * g.q(), h.star()};
  return {g.p() * conjugate(h.q()), conjugate(h.p()) * g.q(), !h.star()};
}

GroupElement inverse(const GroupElement& g) {
  if (!g.star()) return {conjugate(g.p()), conjugate(g.q()), false};
  return {g.q(), g.p(), true};
}

GroupElement reflection(const Quat& alpha) {
  auto len = exact_sqrt(norm2(alpha));
  if (!len || len->is_zero())
    throw std::invalid_argument("reflection: |alpha| is not in Q(sqrt2) for " + to_string(alpha));
  const Quat a = alpha / *len;
  return {-a, a, true};
}

std::string to_string(const GroupElement& g) {
  return "[" + pretty(g.p()) + ", " + pretty(g.q()) + "]" + (g.star() ? "*" : "");
}

std::size_t hash_value(const GroupElement& g) {
  return hash_value(g.p()) * 31u ^ hash_value(g.q()) ^ (g.star() ? 0x5bd1e995u : 0u);
}

std::string to_string(GroupName name) {
  switch (name) {
    case GroupName::WF4: return "WF4";
    case GroupName::AutF4: return "AutF4";
    case GroupName::WB4: return "WB4";
    case GroupName::WB3R_C2: return "WB3R_C2";
    case GroupName::WB3L_C2: return "WB3L_C2";
    case GroupName::WB3R: return "WB3R";
    case GroupName::Generated: return "Generated";
  }
  return "?";
}

FiniteGroup::FiniteGroup(GroupName name, std::vector<GroupElement> elements)
    : name_(name), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteGroup generate(std::span<const GroupElement> gens, GroupName name) {
  std::unordered_set<GroupElement> seen = {GroupElement::identity()};
  std::deque<GroupElement> queue = {GroupElement::identity()};
  while (!queue.empty()) {
    const GroupElement g = queue.front();
    queue.pop_front();
    for (const GroupElement& s : gens) {
      GroupElement x = compose(s, g);
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return FiniteGroup(name, std::vector<GroupElement>(seen.begin(), seen.end()));
}

bool is_closed(std::span<const GroupElement> elements) {
  std::unordered_set<GroupElement> all(elements.begin(), elements.end());
  if (!all.count(GroupElement::identity())) return false;
  std::vector<GroupElement> gens;
  std::unordered_set<GroupElement> span = {GroupElement::identity()};
  for (const GroupElement& g : elements) {
    if (span.count(g)) continue;
    gens.push_back(g);
    const FiniteGroup grown = generate(gens);
    if (grown.order() > all.size()) return false;
    span = std::unordered_set<GroupElement>(grown.begin(), grown.end());
    for (const GroupElement& x : span) {
      if (!all.count(x)) return false;
    }
  }
  return span.size() == all.size();
}

bool is_closed_exhaustive(std::span<const GroupElement> elements) {
  std::unordered_set<GroupElement> all(elements.begin(), elements.end());
  for (const GroupElement& a : elements) {
    for (const GroupElement& b : elements) {
      if (!all.count(compose(a, b))) return false;
    }
  }
  return all.count(GroupElement::identity()) > 0;
}

FiniteGroup build_group(GroupName name) {
  FiniteGroup g(name, assemble(name));
  if (g.order() != expected_order(name))
    throw std::logic_error(to_string(name) + " has order " + std::to_string(g.order()));
  if (!is_closed(g.elements())) throw std::logic_error(to_string(name) + " is not closed");
  return g;
}

const FiniteGroup& group(GroupName name) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<FiniteGroup>> cache(7);
  std::lock_guard lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(name)];
  if (!slot) slot = std::make_unique<FiniteGroup>(build_group(name));
  return *slot;
}

std::vector<GroupElement> f4_generators() {
  const FieldScalar h = FieldScalar::fraction(1, 2);
  const FieldScalar r = FieldScalar::sqrt2() / 2;
  const Quat a1(h, -h, -h, -h);
  const Quat a2 = Quat::unit(3);
  const Quat a3(0, 0, r, -r);
  const Quat a4(0, r, -r, 0);
  return {GroupElement(-a1, a1, true), GroupElement(-a2, a2, true), GroupElement(-a3, a3, true),
          GroupElement(-a4, a4, true)};
}

GroupElement diagram_automorphism() {
  const FieldScalar r = FieldScalar::sqrt2() / 2;
  return {Quat(0, 0, -r, -r), Quat::unit(2), false};
}

Quat b3l_axis() {
  const FieldScalar r = FieldScalar::sqrt2() / 2;
  return {r, r, 0, 0};
}

std::vector<GroupElement> coset_decompose(const FiniteGroup& big, const FiniteGroup& small,
                                          CosetSide side) {
  return coset_decompose<GroupElement>(big.elements(), small.elements(), side,
                                       [](const GroupElement& a, const GroupElement& b) {
                                         return compose(a, b);
                                       });
}

std::vector<Quat> coset_decompose(const QuaternionSet& big, const QuaternionSet& small,
                                  CosetSide side) {
  return coset_decompose<Quat>(big.elements, small.elements, side,
                               [](const Quat& a, const Quat& b) { return a * b; });
}

}  // namespace f4
