#pragma once

#include "f4/root_system.hpp"

#include <array>
#include <string>
#include <vector>

namespace f4 {

struct Orbit {
  SystemName system;
  OrbitLabel label;
  /// Sorted, duplicate-free.
  std::vector<Quat> vertices;
};

/// Worker threads used by orbit generation (default 1).
void set_worker_threads(unsigned n);
unsigned worker_threads();

/// W(G) applied to the weight vector of a dominant nonzero label.
/// Throws std::invalid_argument for zero, non-dominant or wrong-rank labels.
Orbit generate_orbit(SystemName sys, const OrbitLabel& label);
/// Images of v under every element of g, sorted and deduplicated.
std::vector<Quat> orbit_of(const FiniteGroup& g, const Quat& v);
/// Orbit of v under the simple reflections of sys, by breadth-first search.
std::vector<Quat> reflection_orbit(const RootSystem& sys, const Quat& v);
/// Orbit of v under the reflections on the given 0-based nodes only ({v} when empty).
std::vector<Quat> reflection_orbit(const RootSystem& sys, const Quat& v,
                                   const std::vector<int>& nodes);

/// Number of Weyl group elements fixing the weight vector of label.
std::size_t stabilizer_order(SystemName sys, const OrbitLabel& label);
/// Order of the subgroup generated by the simple reflections on the given 0-based nodes.
std::size_t parabolic_order(SystemName sys, const std::vector<int>& nodes);

/// One class of k-faces: the orbit of the face spanned by the sub-diagram `nodes` at the
/// representative vertex.
struct FaceClass {
  int dim;
  /// 0-based sub-diagram nodes.
  std::vector<int> nodes;
  std::string shape;
  std::size_t count;
  /// Dominant label of the face center.
  OrbitLabel center;
};

struct PolytopeComplex {
  Orbit orbit;
  /// (N0, N1, N2, N3).
  std::array<std::size_t, 4> n{};
  std::vector<FaceClass> edge_inventory;
  std::vector<FaceClass> face_inventory;
  std::vector<FaceClass> cell_inventory;

  long long euler() const {
    return static_cast<long long>(n[0]) - static_cast<long long>(n[1]) +
           static_cast<long long>(n[2]) - static_cast<long long>(n[3]);
  }
};

/// Sub-diagrams J generate k-faces when every connected component of J holds an active
/// node; the face through the vertex is fixed by W_J x W_K with K the inactive nodes
/// outside J and not joined to J, so the class has |W| / |W_J x W_K| members.
/// Rank-4 systems only.
PolytopeComplex f_vector(SystemName sys, const OrbitLabel& label);

/// True when every connected component of `nodes` contains an active node of label.
bool generates_face(const RootSystem& sys, const OrbitLabel& label, const std::vector<int>& nodes);
/// Polytope or polygon name for a sub-diagram with the label's ring pattern.
std::string face_shape(const RootSystem& sys, const OrbitLabel& label,
                       const std::vector<int>& nodes);

/// Number of vertex pairs at the minimal nonzero distance.
std::size_t geometric_edge_check(const Orbit& orbit);

}  // namespace f4
