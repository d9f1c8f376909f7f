#include <doctest.h>

#include "support.hpp"

#include "f4/orbit.hpp"
#include "f4/tables.hpp"

#include <Eigen/Dense>

#include <map>
#include <set>

using namespace f4;

namespace {

using VertexSet = std::vector<int>;

int affine_dim(const std::vector<Eigen::Vector4d>& pts, const VertexSet& s) {
  if (s.size() < 2) return static_cast<int>(s.size()) - 1;
  Eigen::MatrixXd m(4, s.size() - 1);
  for (std::size_t k = 1; k < s.size(); ++k) m.col(k - 1) = pts[s[k]] - pts[s[0]];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Face counts from supporting hyperplanes alone. Facet normals of a Wythoff polytope
// lie in the W-orbits of the fundamental weights; the face cut out by a normal is a
// facet when it spans three dimensions. 2-faces are facet pairs meeting in a polygon,
// and u v is an edge when the facets through both meet in {u, v} only.
std::array<std::size_t, 4> hyperplane_f_vector(const OrbitLabel& label) {
  const RootSystem& f4 = root_system(SystemName::F4);
  const Orbit orbit = generate_orbit(SystemName::F4, label);
  std::vector<Eigen::Vector4d> pts;
  for (const Quat& v : orbit.vertices) pts.push_back(test::to_vec(v));

  std::set<VertexSet> facets;
  for (const Quat& w : f4.weights) {
    for (const Quat& n : reflection_orbit(f4, w)) {
      const Eigen::Vector4d nd = test::to_vec(n);
      double best = -1e300;
      for (const auto& p : pts) best = std::max(best, p.dot(nd));
      VertexSet face;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].dot(nd) > best - 1e-9) face.push_back(static_cast<int>(i));
      }
      if (affine_dim(pts, face) == 3) facets.insert(face);
    }
  }
  const std::vector<VertexSet> f(facets.begin(), facets.end());

  std::set<VertexSet> ridges;
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = a + 1; b < f.size(); ++b) {
      VertexSet x = intersect(f[a], f[b]);
      if (x.size() >= 3 && affine_dim(pts, x) == 2) ridges.insert(std::move(x));
    }
  }

  std::vector<std::vector<int>> through(pts.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (int v : f[k]) through[v].push_back(static_cast<int>(k));
  }
  std::set<std::pair<int, int>> edges;
  for (const VertexSet& r : ridges) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        const int u = r[i], v = r[j];
        VertexSet common;
        for (int k : intersect(through[u], through[v])) {
          common = common.empty() ? f[k] : intersect(common, f[k]);
        }
        if (common.size() == 2) edges.emplace(u, v);
      }
    }
  }
  return {pts.size(), edges.size(), ridges.size(), f.size()};
}

std::vector<OrbitLabel> zero_one_labels() {
  std::vector<OrbitLabel> out;
  for (int mask = 1; mask < 16; ++mask) {
    out.push_back(OrbitLabel{(mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1});
  }
  return out;
}

}  // namespace

TEST_CASE("degenerate and malformed labels are rejected") {
  CHECK_THROWS_AS(generate_orbit(SystemName::F4, OrbitLabel{0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate_orbit(SystemName::F4, OrbitLabel{1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate_orbit(SystemName::F4, OrbitLabel{1, -1, 0, 0}), std::invalid_argument);
  CHECK_THROWS(OrbitLabel::parse("1,,0,0"));
  CHECK(OrbitLabel::parse("(1, sqrt2, 0, 1+sqrt2)") == OrbitLabel{FieldScalar(1), FieldScalar::sqrt2(), FieldScalar(0), 1 + FieldScalar::sqrt2()});
}

TEST_CASE("orbit generation by group action and by reflections agree") {
  const RootSystem& f4 = root_system(SystemName::F4);
  for (const OrbitLabel& label : zero_one_labels()) {
    const Orbit o = generate_orbit(SystemName::F4, label);
    const Quat v = label_to_vector(f4, label);
    CHECK(o.vertices == reflection_orbit(f4, v));
    CHECK(o.vertices.size() * stabilizer_order(SystemName::F4, label) == 1152);
    for (const Quat& x : o.vertices) REQUIRE(norm2(x) == norm2(v));
  }
}

TEST_CASE("thread count does not change the orbit") {
  const OrbitLabel label{1, 1, 1, 1};
  const unsigned before = worker_threads();
  set_worker_threads(1);
  const auto one = generate_orbit(SystemName::F4, label).vertices;
  set_worker_threads(4);
  const auto four = generate_orbit(SystemName::F4, label).vertices;
  set_worker_threads(before);
  CHECK(one == four);
  CHECK(one.size() == 1152);
}

TEST_CASE("f-vectors against the supporting-hyperplane oracle") {
  for (const OrbitLabel& label : zero_one_labels()) {
    CAPTURE(label.str());
    const PolytopeComplex pc = f_vector(SystemName::F4, label);
    CHECK(pc.euler() == 0);
    CHECK(pc.n == hyperplane_f_vector(label));
  }
}

TEST_CASE("tabulated f-vectors and cell inventories") {
  CHECK(f_vector(SystemName::F4, OrbitLabel{1, 0, 0, 1}).n == std::array<std::size_t, 4>{144, 576, 672, 240});
  CHECK(f_vector(SystemName::F4, OrbitLabel{1, 0, 0, 0}).n == std::array<std::size_t, 4>{24, 96, 96, 24});
  for (const auto& row : tables::f_vectors()) {
    CAPTURE(row.label.str());
    const PolytopeComplex pc = f_vector(SystemName::F4, row.label);
    CHECK(pc.n == row.n);
    std::map<std::string, std::size_t> got;
    for (const FaceClass& c : pc.cell_inventory) got[c.shape] += c.count;
    CHECK(got == std::map<std::string, std::size_t>(row.cells.begin(), row.cells.end()));
    CHECK(geometric_edge_check(pc.orbit) == pc.n[1]);
  }
}

TEST_CASE("B4 and B3 orbit sizes") {
  CHECK(generate_orbit(SystemName::B4, OrbitLabel{1, 0, 0, 0}).vertices.size() == 8);
  CHECK(generate_orbit(SystemName::B4, OrbitLabel{0, 0, 0, 1}).vertices.size() == 16);
  CHECK(generate_orbit(SystemName::B3R, OrbitLabel{1, 0, 0}).vertices.size() == 8);
  CHECK(generate_orbit(SystemName::B3R, OrbitLabel{0, 1, 0}).vertices.size() == 12);
  CHECK(generate_orbit(SystemName::B3R, OrbitLabel{0, 0, 1}).vertices.size() == 6);
}
