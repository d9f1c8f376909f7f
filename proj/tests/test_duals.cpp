#include <doctest.h>

#include "support.hpp"

#include "f4/dual.hpp"
#include "f4/render.hpp"
#include "f4/tables.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace f4;

namespace {

const std::vector<OrbitLabel>& worked_labels() {
  static const std::vector<OrbitLabel> labels = [] {
    std::vector<OrbitLabel> out;
    for (const auto& row : tables::f_vectors()) out.push_back(row.label);
    return out;
  }();
  return labels;
}

}  // namespace

TEST_CASE("dual scales agree with the polar dual") {
  // The polar vertex of the facet with outer normal w is w / (Lambda, w); the dual
  // built from scaled cell centers must be a uniform multiple of it.
  const RootSystem& f4 = root_system(SystemName::F4);
  for (const OrbitLabel& label : worked_labels()) {
    CAPTURE(label.str());
    const Quat lambda = label_to_vector(f4, label);
    const auto scales = solve_scales(label, cells_at_vertex(label));
    REQUIRE_FALSE(scales.empty());
    double common = -1;
    for (const auto& [m, s] : scales) {
      const double k = s.to_double() * scalar_product(lambda, f4.weights[m]).to_double();
      if (common < 0) common = k;
      CHECK(k == doctest::Approx(common).epsilon(1e-12));
    }
    const DualPolytope d = dual_polytope(label);
    for (const DualShell& shell : d.vertex_orbits) {
      CHECK(shell.radius2 == shell.scale * shell.scale * norm2(f4.weights[shell.weight]));
    }
  }
}

TEST_CASE("dual polytope counts") {
  for (const OrbitLabel& label : worked_labels()) {
    CAPTURE(label.str());
    const PolytopeComplex pc = f_vector(SystemName::F4, label);
    const DualPolytope d = dual_polytope(label);
    CHECK(d.n0 == pc.n[3]);
    CHECK(d.cell_count == pc.n[0]);
    CHECK(dual_vertices(d).size() == d.n0);
  }
}

TEST_CASE("dual cells are convex polyhedra in the hyperplane through their centers") {
  const RootSystem& f4 = root_system(SystemName::F4);
  for (const OrbitLabel& label : worked_labels()) {
    CAPTURE(label.str());
    const PolytopeComplex pc = f_vector(SystemName::F4, label);
    const DualCell cell = dual_cell_local(label);
    const Quat lambda = label_to_vector(f4, label);
    const FieldScalar h = scalar_product(cell.centers.front().point(), lambda);
    for (const CenterVector& c : cell.centers) CHECK(scalar_product(c.point(), lambda) == h);
    const long v = static_cast<long>(cell.centers.size());
    const long e = static_cast<long>(cell.edges.size());
    const long f = static_cast<long>(cell.faces.size());
    CHECK(v - e + f == 2);
    // One face per polytope edge at the vertex.
    CHECK(static_cast<std::size_t>(f) == 2 * pc.n[1] / pc.n[0]);
    const Mesh mesh = mesh_of(cell);
    for (const auto& face : mesh.faces) {
      Eigen::MatrixXd m(3, face.size() - 1);
      for (std::size_t k = 1; k < face.size(); ++k) m.col(k - 1) = mesh.vertices[face[k]] - mesh.vertices[face[0]];
      Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
      lu.setThreshold(1e-9);
      REQUIRE(lu.rank() == 2);
    }
  }
}

TEST_CASE("worked cell shapes") {
  auto lengths = [](const OrbitLabel& l) { return cell_metrics(dual_cell_local(l)).edge_lengths2; };
  const FieldScalar s = FieldScalar::sqrt2();
  CHECK(lengths(OrbitLabel{0, 1, 0, 0}) == std::vector<FieldScalar>{FieldScalar::fraction(10, 9), FieldScalar(2)});
  CHECK(lengths(OrbitLabel{1, 1, 0, 0}) == std::vector<FieldScalar>{FieldScalar::fraction(26, 25), FieldScalar(2)});
  CHECK(lengths(OrbitLabel{0, 1, 1, 0}) == std::vector<FieldScalar>{4 - 2 * s, FieldScalar(2)});
  const DualPolytope d = dual_polytope(OrbitLabel{0, 1, 0, 0});
  FieldScalar r1, r4;
  for (const DualShell& shell : d.vertex_orbits) (shell.weight == 0 ? r1 : r4) = shell.radius2;
  CHECK(r4 / r1 == FieldScalar::fraction(9, 8));
}

TEST_CASE("trapezohedron kites") {
  const OrbitLabel label{1, 0, 0, 1};
  const DualCell cell = dual_cell_local(label);
  const CellMetrics m = cell_metrics(cell);
  REQUIRE(m.faces.size() == 8);
  const auto kite = tables::trapezohedron_kite();
  const FieldScalar ratio = kite.long_side2 / kite.short_side2;
  for (const FaceMetrics& f : m.faces) {
    REQUIRE(f.sides2.size() == 4);
    auto s = f.sides2;
    std::sort(s.begin(), s.end());
    CHECK(s[0] == s[1]);
    CHECK(s[2] == s[3]);
    CHECK(s[2] / s[0] == ratio);
    // Kite area from the diagonals, computed independently in floating point.
    const Mesh mesh = mesh_of(cell);
    const auto& v = f.vertices;
    const double d1 = (mesh.vertices[v[0]] - mesh.vertices[v[2]]).norm();
    const double d2 = (mesh.vertices[v[1]] - mesh.vertices[v[3]]).norm();
    CHECK(f.area == doctest::Approx(d1 * d2 / 2).epsilon(1e-9));
  }
}

TEST_CASE("OFF export") {
  const std::string bipyramid = to_off(mesh_of(dual_cell_local(OrbitLabel{0, 1, 0, 0})));
  std::istringstream in(bipyramid);
  std::string header;
  std::size_t nv = 0, nf = 0, ne = 0;
  in >> header >> nv >> nf >> ne;
  CHECK(header == "OFF");
  CHECK(nv == 5);
  CHECK(nf == 6);
  CHECK(ne == 9);
  const Mesh mesh = mesh_of(dual_cell_local(OrbitLabel{0, 1, 0, 0}));
  for (std::size_t k = 0; k < nv; ++k) {
    double x, y, z;
    in >> x >> y >> z;
    CHECK(x == mesh.vertices[k].x());
    CHECK(y == mesh.vertices[k].y());
    CHECK(z == mesh.vertices[k].z());
  }
  for (std::size_t k = 0; k < nf; ++k) {
    int n = 0;
    in >> n;
    CHECK(n == 3);
    for (int i = 0; i < n; ++i) in >> ne;
  }
  CHECK(to_off(mesh_of(dual_cell_local(OrbitLabel{0, 1, 0, 0}))) == bipyramid);

  const std::string trapezohedron = to_off(mesh_of(dual_cell_local(OrbitLabel{1, 0, 0, 1})));
  CHECK(trapezohedron.rfind("OFF\n10 8 16\n", 0) == 0);

  CHECK_THROWS_AS(to_off(Mesh{}), std::invalid_argument);
  CHECK_THROWS_AS(write_file("/nonexistent-dir/cell.off", bipyramid), std::runtime_error);
  const auto path = std::filesystem::temp_directory_path() / "f4_cell_test.off";
  write_file(path, bipyramid);
  std::ifstream back(path);
  std::stringstream text;
  text << back.rdbuf();
  CHECK(text.str() == bipyramid);
  std::filesystem::remove(path);
}
