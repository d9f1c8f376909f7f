#include "f4/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace f4 {

namespace {

std::atomic<unsigned> g_threads{1};

void require_valid(const RootSystem& sys, const OrbitLabel& label) {
  if (label.rank() != sys.rank())
    throw std::invalid_argument("label " + label.str() + " needs " + std::to_string(sys.rank()) +
                                " entries for " + to_string(sys.name));
  if (label.is_zero()) throw std::invalid_argument("label " + label.str() + " is zero");
  if (!label.is_dominant()) throw std::invalid_argument("label " + label.str() + " is not dominant");
}

std::vector<std::vector<int>> components(const RootSystem& sys, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> out;
  std::vector<bool> used(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp = {nodes[s]};
    used[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t t = 0; t < nodes.size(); ++t) {
        if (!used[t] && sys.adjacent(comp[k], nodes[t])) {
          used[t] = true;
          comp.push_back(nodes[t]);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

std::vector<int> subset_of(int mask, int rank) {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

std::string polygon(int m, int rings) {
  switch (m) {
    case 2: return "square";
    case 3: return rings == 1 ? "triangle" : "hexagon";
    case 4: return rings == 1 ? "square" : "octagon";
    case 6: return rings == 1 ? "hexagon" : "dodecagon";
  }
  return "polygon";
}

std::string prism_over(const std::string& base) {
  if (base == "triangle") return "triangular prism";
  if (base == "square") return "cube";
  if (base == "hexagon") return "hexagonal prism";
  if (base == "octagon") return "octagonal prism";
  return base + " prism";
}

// Names the polyhedron of a linear diagram a-b-c from its Coxeter exponents and rings.
std::string polyhedron(int m_ab, int m_bc, bool ra, bool rb, bool rc) {
  if (m_ab == 4 && m_bc == 3) return polyhedron(m_bc, m_ab, rc, rb, ra);
  const int pattern = (ra ? 4 : 0) | (rb ? 2 : 0) | (rc ? 1 : 0);
  if (m_ab == 3 && m_bc == 3) {
    switch (pattern) {
      case 4: case 1: return "tetrahedron";
      case 2: return "octahedron";
      case 6: case 3: return "truncated tetrahedron";
      case 5: return "cuboctahedron";
      case 7: return "truncated octahedron";
    }
  }
  if (m_ab == 3 && m_bc == 4) {
    switch (pattern) {
      case 4: return "octahedron";
      case 2: return "cuboctahedron";
      case 1: return "cube";
      case 6: return "truncated octahedron";
      case 3: return "truncated cube";
      case 5: return "small rhombicuboctahedron";
      case 7: return "great rhombicuboctahedron";
    }
  }
  return "polyhedron";
}

}  // namespace

void set_worker_threads(unsigned n) { g_threads = std::max(1u, n); }
unsigned worker_threads() { return g_threads; }

std::vector<Quat> orbit_of(const FiniteGroup& g, const Quat& v) {
  const auto& elems = g.elements();
  const unsigned n = std::min<unsigned>(worker_threads(), static_cast<unsigned>(elems.size()));
  std::vector<std::vector<Quat>> parts(std::max(1u, n));
  auto work = [&](unsigned t) {
    std::unordered_set<Quat> local;
    for (std::size_t i = t; i < elems.size(); i += parts.size()) local.insert(elems[i](v));
    parts[t].assign(local.begin(), local.end());
  };
  if (parts.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < parts.size(); ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<Quat> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Orbit generate_orbit(SystemName name, const OrbitLabel& label) {
  const RootSystem& sys = root_system(name);
  require_valid(sys, label);
  return {name, label, orbit_of(group(sys.weyl_group), label_to_vector(sys, label))};
}

std::vector<Quat> reflection_orbit(const RootSystem& sys, const Quat& v) {
  std::vector<int> all;
  for (std::size_t i = 0; i < sys.rank(); ++i) all.push_back(static_cast<int>(i));
  return reflection_orbit(sys, v, all);
}

std::vector<Quat> reflection_orbit(const RootSystem& sys, const Quat& v,
                                   const std::vector<int>& gens) {
  std::unordered_set<Quat> seen = {v};
  std::deque<Quat> queue = {v};
  while (!queue.empty()) {
    const Quat x = queue.front();
    queue.pop_front();
    for (int i : gens) {
      Quat y = reflect_classical(sys.simple_roots[i], x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Quat> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t stabilizer_order(SystemName name, const OrbitLabel& label) {
  const RootSystem& sys = root_system(name);
  if (label.rank() != sys.rank()) throw std::invalid_argument("label has wrong rank");
  const Quat v = label_to_vector(sys, label);
  std::size_t count = 0;
  for (const GroupElement& g : group(sys.weyl_group)) {
    if (g(v) == v) ++count;
  }
  return count;
}

std::size_t parabolic_order(SystemName name, const std::vector<int>& nodes) {
  static std::mutex mutex;
  static std::map<std::pair<SystemName, int>, std::size_t> cache;
  int mask = 0;
  for (int i : nodes) mask |= 1 << i;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({name, mask}); it != cache.end()) return it->second;
  }
  const RootSystem& sys = root_system(name);
  std::vector<GroupElement> gens;
  for (int i : nodes) gens.push_back(simple_reflection(sys, i));
  const std::size_t order = generate(gens).order();
  std::lock_guard lock(mutex);
  cache[{name, mask}] = order;
  return order;
}

bool generates_face(const RootSystem& sys, const OrbitLabel& label, const std::vector<int>& nodes) {
  for (const auto& comp : components(sys, nodes)) {
    if (std::none_of(comp.begin(), comp.end(), [&](int i) { return !label[i].is_zero(); }))
      return false;
  }
  return true;
}

std::string face_shape(const RootSystem& sys, const OrbitLabel& label,
                       const std::vector<int>& nodes) {
  auto ring = [&](int i) { return !label[i].is_zero(); };
  if (nodes.size() == 1) return "edge";
  if (nodes.size() == 2) {
    return polygon(sys.coxeter_m(nodes[0], nodes[1]), ring(nodes[0]) + ring(nodes[1]));
  }
  if (nodes.size() != 3) return "polytope";
  const auto comps = components(sys, nodes);
  if (comps.size() == 1) {
    // Put an end node first, then walk the chain.
    std::vector<int> chain;
    for (int x : nodes) {
      int degree = 0;
      for (int y : nodes) degree += sys.adjacent(x, y);
      if (degree == 1) {
        chain.push_back(x);
        break;
      }
    }
    while (chain.size() < 3) {
      for (int y : nodes) {
        if (std::find(chain.begin(), chain.end(), y) == chain.end() &&
            sys.adjacent(chain.back(), y)) {
          chain.push_back(y);
          break;
        }
      }
    }
    return polyhedron(sys.coxeter_m(chain[0], chain[1]), sys.coxeter_m(chain[1], chain[2]),
                      ring(chain[0]), ring(chain[1]), ring(chain[2]));
  }
  if (comps.size() == 2) {
    const auto& pair = comps[0].size() == 2 ? comps[0] : comps[1];
    return prism_over(face_shape(sys, label, pair));
  }
  return "cube";
}

PolytopeComplex f_vector(SystemName name, const OrbitLabel& label) {
  const RootSystem& sys = root_system(name);
  require_valid(sys, label);
  const int rank = static_cast<int>(sys.rank());
  if (rank != 4) throw std::invalid_argument("f_vector needs a rank-4 system");
  PolytopeComplex out;
  out.orbit = generate_orbit(name, label);
  const std::size_t w = group(sys.weyl_group).order();
  const Quat lambda = label_to_vector(sys, label);
  out.n[0] = out.orbit.vertices.size();

  for (int mask = 1; mask < (1 << rank); ++mask) {
    const std::vector<int> nodes = subset_of(mask, rank);
    const int k = static_cast<int>(nodes.size());
    if (k > 3 || !generates_face(sys, label, nodes)) continue;
    std::vector<int> fixing = nodes;
    for (int i = 0; i < rank; ++i) {
      if (mask >> i & 1 || !label[i].is_zero()) continue;
      if (std::none_of(nodes.begin(), nodes.end(), [&](int j) { return sys.adjacent(i, j); }))
        fixing.push_back(i);
    }
    std::sort(fixing.begin(), fixing.end());
    // Face center: project the vertex onto the complement of the face's roots.
    FieldMatrix sub(k, k);
    FieldVector rhs(k);
    for (int a = 0; a < k; ++a) {
      rhs(a) = scalar_product(lambda, sys.simple_roots[nodes[a]]);
      for (int b = 0; b < k; ++b) sub(a, b) = sys.gram(nodes[a], nodes[b]);
    }
    const FieldVector x = exact_inverse(sub) * rhs;
    Quat center = lambda;
    for (int a = 0; a < k; ++a) center -= sys.simple_roots[nodes[a]] * x(a);

    FaceClass fc{k, nodes, face_shape(sys, label, nodes), w / parabolic_order(name, fixing),
                 vector_to_label(sys, center)};
    out.n[k] += fc.count;
    (k == 1 ? out.edge_inventory : k == 2 ? out.face_inventory : out.cell_inventory)
        .push_back(std::move(fc));
  }
  return out;
}

std::size_t geometric_edge_check(const Orbit& orbit) {
  const auto& v = orbit.vertices;
  if (v.size() < 2) return 0;
  std::vector<Eigen::Vector4d> f;
  for (const Quat& q : v) f.push_back(q.cast<double>().coeffs());
  double best = INFINITY;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::min(best, (f[i] - f[j]).squaredNorm());
  }
  // Exact comparison inside a float window far wider than rounding error.
  const double window = 1e-6 * std::max(1.0, best);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if ((f[i] - f[j]).squaredNorm() <= best + window) candidates.emplace_back(i, j);
    }
  }
  std::optional<FieldScalar> exact_best;
  std::size_t count = 0;
  for (auto [i, j] : candidates) {
    const FieldScalar d = norm2(v[i] - v[j]);
    if (!exact_best || d < *exact_best) {
      exact_best = d;
      count = 1;
    } else if (d == *exact_best) {
      ++count;
    }
  }
  return count;
}

}  // namespace f4
