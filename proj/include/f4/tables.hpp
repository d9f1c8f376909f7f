#pragma once

// Reference golden values used by the verification battery and the tests.
// Entries are transcribed as printed; known misprints carry a corrected value
// next to the printed one.

#include "f4/branching.hpp"
#include "f4/quaternion_sets.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace f4::tables {

/// Row X, column Y holds the block containing X * Y.
std::array<std::array<SubsetName, 6>, 6> product_table();

struct FVectorRow {
  OrbitLabel label;
  std::array<std::size_t, 4> n;
  /// Face and cell shape names with counts, as listed.
  std::vector<std::pair<std::string, std::size_t>> cells;
};

/// The nine polytopes with a worked dual, in the order (1,0,0,0), (0,1,0,0), ...
std::vector<FVectorRow> f_vectors();

struct B4Row {
  OrbitLabel f4;
  std::vector<OrbitLabel> parts;
};

/// B4 decompositions of the fifteen 0/1 labels.
std::vector<B4Row> b4_decompositions();

struct SliceRow {
  OrbitLabel b3;
  FieldScalar height;
};

struct B3A1Row {
  OrbitLabel f4;
  std::vector<SliceRow> slices;
};

/// B3 x A1 decompositions of the fifteen 0/1 labels, unscaled.
std::vector<B3A1Row> b3a1_decompositions();

/// Three-term B4 formula for a generic label.
std::array<OrbitLabel, 3> b4_formula(const OrbitLabel& a);

struct SliceFormula {
  std::function<OrbitLabel(const OrbitLabel&)> label;
  std::function<FieldScalar(const OrbitLabel&)> height;
  /// Set for misprinted blocks.
  std::optional<std::function<OrbitLabel(const OrbitLabel&)>> corrected_label = std::nullopt;
  std::optional<std::function<FieldScalar(const OrbitLabel&)>> corrected_height = std::nullopt;
};

/// The twelve generic slice families (a_i, b_i) with the +-height along the real axis.
std::vector<SliceFormula> b3a1_formula();

/// Worked 24-cell slicing: the poles, the equatorial octahedron and the two cubes of T.
std::vector<std::vector<Quat>> t_slices();
/// Worked dual 24-cell slicing: two octahedra and the cuboctahedron of T'.
std::vector<std::vector<Quat>> t_prime_slices();

struct OctahedronRow {
  std::vector<Quat> vertices;
  Quat center;
};

/// The six octahedra of the 24-cell T at the vertex 1 with their scaled centers.
std::vector<OctahedronRow> octahedra_at_one();

struct ScaleRow {
  OrbitLabel label;
  /// (0-based weight index, scale) for every non-unit scale.
  std::vector<std::pair<int, FieldScalar>> scales;
};

std::vector<ScaleRow> dual_scales();

struct CellRow {
  std::string name;
  Point3 printed;
  std::optional<Point3> corrected;
};

struct CellTable {
  OrbitLabel label;
  std::vector<CellRow> rows;
  /// p0 = numerator / sqrt(norm2) as printed, where given.
  std::optional<std::pair<Quat, FieldScalar>> p0;
};

/// Dual-cell vertices in the (p1, p2, p3) frame, as printed up to a common scale.
std::vector<CellTable> dual_cells();

struct RadiusRow {
  OrbitLabel label;
  /// (0-based weight index, radius) rounded as printed.
  std::vector<std::pair<int, double>> radii;
  double tolerance;
};

std::vector<RadiusRow> dual_radii();

/// R4 / R1 for the dual of (0,1,0,0), exactly.
FieldScalar bipyramid_radius_ratio();

struct Kite {
  FieldScalar long_side2;
  FieldScalar short_side2;
  double area;
  double area_tolerance;
};

Kite trapezohedron_kite();

struct Erratum {
  std::string where;
  std::string printed;
  std::string computed;
  std::string evidence;
};

/// Misprints found by recomputation; computation prevails.
std::vector<Erratum> errata();

}  // namespace f4::tables
