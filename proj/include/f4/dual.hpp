#pragma once

#include "f4/branching.hpp"
#include "f4/orbit.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace f4 {

/// Center direction of one cell at the representative vertex: witness(w_m).
struct CenterVector {
  /// 0-based index m of the fundamental weight w_m.
  int weight;
  /// Simple reflections applied right to left: {2, 3} means r3 r4 w_m in 1-based names.
  std::vector<int> word;
  GroupElement witness;
  /// Unscaled direction witness(w_m).
  Quat direction;
  FieldScalar scale{1};

  Quat point() const { return direction * scale; }
  /// For example "r3r4w4".
  std::string name() const;
};

/// Cells of one type meeting at the representative vertex.
struct CellType {
  /// 0-based node m; the cells come from the sub-diagram of the other nodes.
  int node;
  std::vector<int> nodes;
  std::string shape;
  std::size_t count;
  std::vector<CenterVector> centers;
};

/// Cell types at the representative vertex, with centers transported by the vertex
/// stabilizer W_I (I the inactive nodes): |W_I| / |W_(I minus m-neighbours)| centers each.
std::vector<CellType> cells_at_vertex(const OrbitLabel& label);

/// 0-based weight whose centers keep scale 1.
int reference_node(const OrbitLabel& label);

/// Scale s_m for each cell node m with (s_m w_m - w_ref, Lambda) = 0.
/// Throws std::domain_error when (w_m, Lambda) = 0.
std::map<int, FieldScalar> solve_scales(const OrbitLabel& label, const std::vector<CellType>& cells);

struct DualShell {
  int weight;
  FieldScalar scale;
  /// scale times the unit label e_m.
  OrbitLabel label;
  std::size_t size;
  FieldScalar radius2;
};

struct DualPolytope {
  OrbitLabel source_label;
  std::vector<DualShell> vertex_orbits;
  /// One cell per vertex of the source polytope.
  std::size_t cell_count;
  std::size_t n0;
  std::vector<FieldScalar> radii2() const;
};

DualPolytope dual_polytope(const OrbitLabel& label);
/// All dual vertices, sorted.
std::vector<Quat> dual_vertices(const DualPolytope& dual);

/// The dual cell at the representative vertex Lambda, in the frame p0 = Lambda,
/// p_i = e_i Lambda. The frame is orthogonal with common squared norm |Lambda|^2, so
/// local coordinates (c, p_i) are true coordinates times |Lambda|.
struct DualCell {
  OrbitLabel source_label;
  Quat apex_vertex;
  std::vector<CenterVector> centers;
  std::array<Quat, 4> frame;
  FieldScalar frame_norm2;
  /// Common value of (c, p0) over the centers.
  FieldScalar offset;
  std::vector<Point3> local_coords;
  /// Squared length unit: true squared length = |difference|^2 / unit2.
  FieldScalar unit2;
  std::vector<std::pair<int, int>> edges;
  /// Vertex cycles, counterclockwise seen from outside.
  std::vector<std::vector<int>> faces;
};

/// Cell vertices are the scaled centers; two are joined when their cells share a 2-face
/// through Lambda, and each edge of the polytope at Lambda bounds one face.
DualCell dual_cell_local(const OrbitLabel& label);

/// Copy whose length unit makes local_coords / k the unit coordinates.
DualCell with_coordinate_scale(DualCell cell, const FieldScalar& k);

struct FaceMetrics {
  std::vector<int> vertices;
  std::vector<FieldScalar> sides2;
  double area;
};

struct CellMetrics {
  std::vector<std::tuple<int, int, FieldScalar>> edges;
  /// Distinct squared edge lengths, ascending.
  std::vector<FieldScalar> edge_lengths2;
  std::vector<FaceMetrics> faces;
};

CellMetrics cell_metrics(const DualCell& cell);

/// Unique k > 0 with computed[i] = k * reference[pi(i)] for some bijection pi, if any.
std::optional<FieldScalar> proportional_sets(const std::vector<Point3>& computed,
                                             const std::vector<Point3>& reference);

}  // namespace f4
