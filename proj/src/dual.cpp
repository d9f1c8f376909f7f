#include "f4/dual.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <unordered_map>

namespace f4 {

namespace {

const RootSystem& f4sys() { return root_system(SystemName::F4); }

void require_f4(const OrbitLabel& label) {
  if (label.rank() != 4 || label.is_zero() || !label.is_dominant())
    throw std::invalid_argument("expected a dominant nonzero F4 label, got " + label.str());
}

std::vector<int> inactive_nodes(const OrbitLabel& label) {
  std::vector<int> out;
  for (int i = 0; i < 4; ++i) {
    if (label[i].is_zero()) out.push_back(i);
  }
  return out;
}

std::vector<int> all_but(int m) {
  std::vector<int> out;
  for (int i = 0; i < 4; ++i) {
    if (i != m) out.push_back(i);
  }
  return out;
}

Point3 local_point(const Quat& c, const std::array<Quat, 4>& frame) {
  return Point3(scalar_product(c, frame[1]), scalar_product(c, frame[2]),
                scalar_product(c, frame[3]));
}

Eigen::Vector3d to_double(const Point3& p) {
  return {p(0).to_double(), p(1).to_double(), p(2).to_double()};
}

std::vector<std::vector<int>> cycles_through_edges(const std::vector<Quat>& edges,
                                                   const std::vector<Quat>& centers,
                                                   std::vector<std::pair<int, int>>& adjacent) {
  const int n = static_cast<int>(centers.size());
  std::vector<std::vector<bool>> holds(n, std::vector<bool>(edges.size()));
  for (int c = 0; c < n; ++c) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      holds[c][e] = scalar_product(edges[e], centers[c]).is_zero();
    }
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<Quat> common;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (holds[a][e] && holds[b][e]) common.push_back(edges[e]);
      }
      if (exact_rank(common) == 2) {
        adj[a][b] = adj[b][a] = true;
        adjacent.emplace_back(a, b);
      }
    }
  }
  std::vector<std::vector<int>> faces;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::vector<int> around;
    for (int c = 0; c < n; ++c) {
      if (holds[c][e]) around.push_back(c);
    }
    std::vector<int> cycle = {around.front()};
    std::vector<bool> used(n, false);
    used[around.front()] = true;
    while (cycle.size() < around.size()) {
      int next = -1;
      for (int c : around) {
        if (!used[c] && adj[cycle.back()][c]) {
          next = c;
          break;
        }
      }
      if (next < 0) throw std::logic_error("cells around an edge do not form a cycle");
      used[next] = true;
      cycle.push_back(next);
    }
    if (cycle.size() < 3 || !adj[cycle.back()][cycle.front()])
      throw std::logic_error("cells around an edge do not close up");
    faces.push_back(cycle);
  }
  return faces;
}

}  // namespace

std::string CenterVector::name() const {
  std::string out;
  for (int i : word) out += "r" + std::to_string(i + 1);
  return out + "w" + std::to_string(weight + 1);
}

std::vector<CellType> cells_at_vertex(const OrbitLabel& label) {
  require_f4(label);
  const RootSystem& sys = f4sys();
  const std::vector<int> fixing = inactive_nodes(label);
  std::vector<CellType> out;
  for (int m = 0; m < 4; ++m) {
    const std::vector<int> nodes = all_but(m);
    if (!generates_face(sys, label, nodes)) continue;
    CellType type{m, nodes, face_shape(sys, label, nodes), 0, {}};
    const Quat start = sys.weights[m];
    std::unordered_map<Quat, std::size_t> index = {{start, 0}};
    type.centers.push_back({m, {}, GroupElement::identity(), start, FieldScalar(1)});
    for (std::size_t k = 0; k < type.centers.size(); ++k) {
      for (int i : fixing) {
        const CenterVector& from = type.centers[k];
        Quat y = reflect_classical(sys.simple_roots[i], from.direction);
        if (index.count(y)) continue;
        index.emplace(y, type.centers.size());
        std::vector<int> word = {i};
        word.insert(word.end(), from.word.begin(), from.word.end());
        GroupElement w = compose(sys.reflections[i], from.witness);
        type.centers.push_back({m, std::move(word), w, y, FieldScalar(1)});
      }
    }
    type.count = type.centers.size();
    out.push_back(std::move(type));
  }
  return out;
}

int reference_node(const OrbitLabel& label) {
  require_f4(label);
  int mask = 0;
  for (int i = 0; i < 4; ++i) mask |= label[i].is_zero() ? 0 : 1 << i;
  auto mirror = [](int m) {
    int out = 0;
    for (int i = 0; i < 4; ++i) out |= (m >> i & 1) << (3 - i);
    return out;
  };
  // 1-based reference node per active pattern, bit i standing for node i+1.
  static const std::map<int, int> table = {
      {0b0001, 4}, {0b0010, 4}, {0b0011, 4}, {0b0101, 2}, {0b1001, 2},
      {0b0110, 1}, {0b0111, 4}, {0b1011, 3}, {0b1111, 1},
  };
  if (auto it = table.find(mask); it != table.end()) return it->second - 1;
  if (auto it = table.find(mirror(mask)); it != table.end()) return 4 - it->second;
  throw std::logic_error("no reference node for " + label.str());
}

std::map<int, FieldScalar> solve_scales(const OrbitLabel& label,
                                        const std::vector<CellType>& cells) {
  const RootSystem& sys = f4sys();
  const Quat lambda = label_to_vector(sys, label);
  int ref = reference_node(label);
  if (std::none_of(cells.begin(), cells.end(), [&](const CellType& c) { return c.node == ref; }))
    ref = cells.back().node;
  const FieldScalar target = scalar_product(sys.weights[ref], lambda);
  std::map<int, FieldScalar> out;
  for (const CellType& c : cells) {
    const FieldScalar d = scalar_product(sys.weights[c.node], lambda);
    if (d.is_zero())
      throw std::domain_error("cannot normalize center w" + std::to_string(c.node + 1) +
                              " against " + label.str());
    out[c.node] = target / d;
  }
  return out;
}

std::vector<FieldScalar> DualPolytope::radii2() const {
  std::vector<FieldScalar> out;
  for (const auto& s : vertex_orbits) out.push_back(s.radius2);
  return out;
}

DualPolytope dual_polytope(const OrbitLabel& label) {
  const RootSystem& sys = f4sys();
  const auto cells = cells_at_vertex(label);
  const auto scales = solve_scales(label, cells);
  const std::size_t w = group(GroupName::WF4).order();
  DualPolytope out{label, {}, w / stabilizer_order(SystemName::F4, label), 0};
  for (const CellType& c : cells) {
    const FieldScalar s = scales.at(c.node);
    OrbitLabel unit{0, 0, 0, 0};
    unit[c.node] = s;
    const std::size_t size = w / parabolic_order(SystemName::F4, c.nodes);
    const Quat& wm = sys.weights[c.node];
    out.vertex_orbits.push_back({c.node, s, unit, size, s * s * scalar_product(wm, wm)});
    out.n0 += size;
  }
  return out;
}

std::vector<Quat> dual_vertices(const DualPolytope& dual) {
  std::vector<Quat> out;
  for (const DualShell& s : dual.vertex_orbits) {
    const Orbit o = generate_orbit(SystemName::F4, s.label);
    out.insert(out.end(), o.vertices.begin(), o.vertices.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

DualCell dual_cell_local(const OrbitLabel& label) {
  const RootSystem& sys = f4sys();
  const auto cells = cells_at_vertex(label);
  const auto scales = solve_scales(label, cells);
  DualCell cell;
  cell.source_label = label;
  cell.apex_vertex = label_to_vector(sys, label);
  const Quat& lambda = cell.apex_vertex;
  for (const CellType& c : cells) {
    for (CenterVector v : c.centers) {
      v.scale = scales.at(c.node);
      cell.centers.push_back(std::move(v));
    }
  }
  cell.frame = {lambda, Quat::unit(1) * lambda, Quat::unit(2) * lambda, Quat::unit(3) * lambda};
  cell.frame_norm2 = norm2(lambda);
  cell.unit2 = cell.frame_norm2;
  cell.offset = scalar_product(cell.centers.front().point(), lambda);
  std::vector<Quat> points;
  for (const CenterVector& c : cell.centers) {
    points.push_back(c.point());
    cell.local_coords.push_back(local_point(c.point(), cell.frame));
  }

  std::vector<Quat> edges;
  for (int i = 0; i < 4; ++i) {
    if (label[i].is_zero()) continue;
    for (const Quat& u : reflection_orbit(sys, sys.simple_roots[i], inactive_nodes(label))) {
      edges.push_back(u);
    }
  }
  cell.faces = cycles_through_edges(edges, points, cell.edges);

  // Orient each face outward with respect to the cell centroid.
  std::vector<Eigen::Vector3d> f;
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const Point3& p : cell.local_coords) {
    f.push_back(to_double(p));
    centroid += f.back();
  }
  centroid /= static_cast<double>(f.size());
  for (auto& face : cell.faces) {
    Eigen::Vector3d normal = Eigen::Vector3d::Zero();
    Eigen::Vector3d mid = Eigen::Vector3d::Zero();
    for (std::size_t k = 0; k < face.size(); ++k) {
      normal += f[face[k]].cross(f[face[(k + 1) % face.size()]]);
      mid += f[face[k]];
    }
    mid /= static_cast<double>(face.size());
    if (normal.dot(mid - centroid) < 0) std::reverse(face.begin(), face.end());
  }
  return cell;
}

DualCell with_coordinate_scale(DualCell cell, const FieldScalar& k) {
  cell.unit2 = k * k;
  return cell;
}

CellMetrics cell_metrics(const DualCell& cell) {
  CellMetrics out;
  const auto& x = cell.local_coords;
  auto len2 = [&](int a, int b) { return (x[a] - x[b]).squaredNorm() / cell.unit2; };
  std::set<FieldScalar> distinct;
  for (auto [a, b] : cell.edges) {
    const FieldScalar d = len2(a, b);
    out.edges.emplace_back(a, b, d);
    distinct.insert(d);
  }
  out.edge_lengths2.assign(distinct.begin(), distinct.end());
  const double unit = std::sqrt(cell.unit2.to_double());
  for (const auto& face : cell.faces) {
    FaceMetrics fm{face, {}, 0.0};
    Eigen::Vector3d twice_area = Eigen::Vector3d::Zero();
    for (std::size_t k = 0; k < face.size(); ++k) {
      const int a = face[k];
      const int b = face[(k + 1) % face.size()];
      fm.sides2.push_back(len2(a, b));
      twice_area += (to_double(x[a]) / unit).cross(to_double(x[b]) / unit);
    }
    fm.area = 0.5 * twice_area.norm();
    out.faces.push_back(std::move(fm));
  }
  return out;
}

std::optional<FieldScalar> proportional_sets(const std::vector<Point3>& computed,
                                             const std::vector<Point3>& reference) {
  if (computed.size() != reference.size() || computed.empty()) return std::nullopt;
  auto key = [](const Point3& p) { return std::array<FieldScalar, 3>{p(0), p(1), p(2)}; };
  std::multiset<std::array<FieldScalar, 3>> want;
  for (const Point3& p : computed) want.insert(key(p));
  const Point3& anchor = computed.front();
  for (const Point3& r : reference) {
    std::optional<FieldScalar> k;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      if (r(i).is_zero() != anchor(i).is_zero()) ok = false;
      else if (!r(i).is_zero()) {
        const FieldScalar ratio = anchor(i) / r(i);
        if (k && *k != ratio) ok = false;
        k = ratio;
      }
    }
    if (!ok || !k || k->sign() <= 0) continue;
    std::multiset<std::array<FieldScalar, 3>> got;
    for (const Point3& q : reference) got.insert(key(Point3(q * *k)));
    if (got == want) return k;
  }
  return std::nullopt;
}

}  // namespace f4
