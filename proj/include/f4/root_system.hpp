#pragma once

#include "f4/group.hpp"
#include "f4/quaternion.hpp"

#include <Eigen/Core>

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace f4 {

using FieldMatrix = Eigen::Matrix<FieldScalar, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;
using FieldVector = Eigen::Matrix<FieldScalar, Eigen::Dynamic, 1, 0, 4, 1>;

enum class SystemName { F4, B4, B3R };

std::string to_string(SystemName name);

/// Dynkin label (a_1, ..., a_n); the vector sum a_i w_i in the weight basis.
class OrbitLabel {
 public:
  OrbitLabel() = default;
  explicit OrbitLabel(std::vector<FieldScalar> a) : a_(std::move(a)) {}
  OrbitLabel(std::initializer_list<FieldScalar> a) : a_(a) {}

  /// Parses "1,0,sqrt2,0" or "(1, 0, sqrt2, 0)".
  static OrbitLabel parse(std::string_view text);

  std::size_t rank() const { return a_.size(); }
  const FieldScalar& operator[](std::size_t i) const { return a_[i]; }
  FieldScalar& operator[](std::size_t i) { return a_[i]; }
  const std::vector<FieldScalar>& values() const { return a_; }
  auto begin() const { return a_.begin(); }
  auto end() const { return a_.end(); }

  bool is_dominant() const;
  bool is_zero() const;
  /// Indices (0-based) of nonzero entries.
  std::vector<int> active_nodes() const;

  /// "(a1,a2,a3,a4)" in compact notation.
  std::string str() const;

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
  friend std::strong_ordering operator<=>(const OrbitLabel& a, const OrbitLabel& b);

 private:
  std::vector<FieldScalar> a_;
};

struct RootSystem {
  SystemName name;
  std::vector<Quat> simple_roots;
  /// C_ij = 2 (a_i, a_j) / (a_j, a_j).
  FieldMatrix cartan;
  FieldMatrix cartan_inv;
  /// Gram matrix (a_i, a_j) of the simple roots.
  FieldMatrix gram;
  /// Fundamental weights, dual to the coroots: 2 (w_i, a_j) / (a_j, a_j) = delta_ij.
  std::vector<Quat> weights;
  /// Simple reflections as group elements.
  std::vector<GroupElement> reflections;
  /// Group generated by the simple reflections, as named in group().
  GroupName weyl_group;

  std::size_t rank() const { return simple_roots.size(); }
  /// Coxeter exponent m_ij of the diagram edge between nodes i and j (2, 3, 4 or 6).
  int coxeter_m(int i, int j) const;
  bool adjacent(int i, int j) const { return i != j && coxeter_m(i, j) > 2; }
};

/// F4 roots a1 = (1 - e1 - e2 - e3)/sqrt2, a2 = sqrt2 e3, a3 = e2 - e3, a4 = e1 - e2;
/// B4 roots 1 - e1, e1 - e2, e2 - e3, sqrt2 e3; B3R roots sqrt2 e3, e2 - e3, e1 - e2.
RootSystem build_root_system(SystemName name);
const RootSystem& root_system(SystemName name);

/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
FieldMatrix exact_inverse(const FieldMatrix& m);
/// Exact rank of the span of a list of quaternions.
int exact_rank(const std::vector<Quat>& vectors);

Quat label_to_vector(const RootSystem& sys, const OrbitLabel& label);
/// a_i = 2 (v, alpha_i) / (alpha_i, alpha_i). Drops any component orthogonal to the roots.
OrbitLabel vector_to_label(const RootSystem& sys, const Quat& v);

GroupElement simple_reflection(const RootSystem& sys, int i);

struct DominantForm {
  OrbitLabel label;
  Quat vector;
  /// witness(v) == vector for the input v.
  GroupElement witness;
};

/// Reflects on the lowest-index negative label until every label is nonnegative.
DominantForm dominant_representative(const RootSystem& sys, const Quat& v);

}  // namespace f4
