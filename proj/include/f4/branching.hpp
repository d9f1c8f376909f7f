#pragma once

#include "f4/orbit.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace f4 {

struct B4Branching {
  OrbitLabel input;
  /// Distinct B4-dominant labels in ascending order (one to three of them).
  std::vector<OrbitLabel> parts;
};

/// Right coset representatives of W(B4) in W(F4): [1,1], [w0,1], [w0^2,1] with
/// w0 = (1 + e1 + e2 + e3)/2.
std::vector<GroupElement> b4_coset_representatives();

B4Branching branch_b4(const OrbitLabel& label);
/// True when the W(B4) orbits of the parts tile the W(F4) orbit exactly.
bool b4_union_matches(const B4Branching& b);

enum class SliceMultiplicity { PlusMinus, Zero };

/// W(B3) orbit of the vector part at height +-h along the real axis.
struct B3Slice {
  OrbitLabel b3_label;
  /// Real part divided by sqrt2, i.e. the coefficient along the first F4 weight w1 = sqrt2.
  /// Nonnegative; the record stands for the slices at +h and -h unless h = 0.
  FieldScalar height;
  SliceMultiplicity multiplicity;
};

struct B3A1Branching {
  OrbitLabel input;
  /// Ascending by label, then height.
  std::vector<B3Slice> slices;
};

/// Left cosets [p, 1] for the 24 elements p of T.
std::vector<GroupElement> b3a1_coset_representatives();

B3A1Branching branch_b3a1(const OrbitLabel& label);
std::size_t slice_vertex_count(const B3Slice& slice);
/// True when the slices rebuild the W(F4) orbit exactly.
bool b3a1_union_matches(const B3A1Branching& b);

using Point3 = Eigen::Matrix<FieldScalar, 3, 1>;

struct ProjectedSlice {
  /// Signed height.
  FieldScalar height;
  OrbitLabel b3_label;
  /// (e1, e2, e3) coordinates, sorted.
  std::vector<Point3> points;
};

/// One entry per signed slice, by descending height.
std::vector<ProjectedSlice> project_3d(const OrbitLabel& label);
std::vector<ProjectedSlice> project_3d(const B3A1Branching& b);
/// Rebuilds the 4D point h sqrt2 + x e1 + y e2 + z e3 of a projected point.
Quat lift(const FieldScalar& height, const Point3& p);

}  // namespace f4
