#pragma once

#include "f4/field.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace f4 {

/// Real quaternion q0 + q1 e1 + q2 e2 + q3 e3 with e1 e2 = e3 (and cyclic).
template <typename Scalar>
class Quaternion {
 public:
  using Coefficients = Eigen::Matrix<Scalar, 4, 1>;

  Quaternion() : c_(Coefficients::Constant(Scalar(0))) {}
  Quaternion(const Scalar& q0, const Scalar& q1, const Scalar& q2, const Scalar& q3) {
    c_ << q0, q1, q2, q3;
  }
  explicit Quaternion(const Coefficients& c) : c_(c) {}

  static Quaternion identity() { return Quaternion(Scalar(1), Scalar(0), Scalar(0), Scalar(0)); }
  /// e_i for i = 0..3 (e_0 = 1).
  static Quaternion unit(int i) {
    Quaternion q;
    q.c_(i) = Scalar(1);
    return q;
  }

  const Scalar& operator[](int i) const { return c_(i); }
  Scalar& operator[](int i) { return c_(i); }
  const Coefficients& coeffs() const { return c_; }
  Coefficients& coeffs() { return c_; }

  const Scalar& real() const { return c_(0); }
  Eigen::Matrix<Scalar, 3, 1> vec() const { return c_.template tail<3>(); }
  bool is_pure() const { return c_(0) == Scalar(0); }
  bool is_zero() const { return c_ == Coefficients::Constant(Scalar(0)); }

  template <typename T>
  Quaternion<T> cast() const {
    if constexpr (std::is_same_v<T, double> && std::is_same_v<Scalar, FieldScalar>) {
      return Quaternion<T>(c_(0).to_double(), c_(1).to_double(), c_(2).to_double(),
                           c_(3).to_double());
    } else {
      return Quaternion<T>(c_.template cast<T>());
    }
  }

  Quaternion operator-() const { return Quaternion(Coefficients(-c_)); }
  Quaternion& operator+=(const Quaternion& o) {
    c_ += o.c_;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    c_ -= o.c_;
    return *this;
  }
  Quaternion& operator*=(const Scalar& s) {
    c_ *= s;
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(Quaternion a, const Scalar& s) { return a *= s; }
  friend Quaternion operator*(const Scalar& s, Quaternion a) { return a *= s; }
  friend Quaternion operator/(Quaternion a, const Scalar& s) {
    if (s == Scalar(0)) throw std::domain_error("quaternion division by zero scalar");
    a.c_ /= s;
    return a;
  }

  /// Hamilton product.
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    const Coefficients& a = p.c_;
    const Coefficients& b = q.c_;
    return Quaternion(a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3),
                      a(0) * b(1) + a(1) * b(0) + a(2) * b(3) - a(3) * b(2),
                      a(0) * b(2) - a(1) * b(3) + a(2) * b(0) + a(3) * b(1),
                      a(0) * b(3) + a(1) * b(2) - a(2) * b(1) + a(3) * b(0));
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c_ == b.c_; }

  /// Lexicographic on (q0, q1, q2, q3).
  friend std::strong_ordering operator<=>(const Quaternion& a, const Quaternion& b)
    requires std::three_way_comparable<Scalar>
  {
    for (int i = 0; i < 4; ++i) {
      if (auto c = a.c_(i) <=> b.c_(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  Coefficients c_;
};

using Quat = Quaternion<FieldScalar>;

template <typename Scalar>
Quaternion<Scalar> conjugate(const Quaternion<Scalar>& q) {
  return Quaternion<Scalar>(q[0], -q[1], -q[2], -q[3]);
}

/// Euclidean scalar product sum p_i q_i.
template <typename Scalar>
Scalar scalar_product(const Quaternion<Scalar>& p, const Quaternion<Scalar>& q) {
  return p.coeffs().dot(q.coeffs());
}

/// Scalar product through the quaternion form (conj(p) q + conj(q) p) / 2.
template <typename Scalar>
Scalar scalar_product_hamilton(const Quaternion<Scalar>& p, const Quaternion<Scalar>& q) {
  const Quaternion<Scalar> s = conjugate(p) * q + conjugate(q) * p;
  if (!(s[1] == Scalar(0) && s[2] == Scalar(0) && s[3] == Scalar(0)))
    throw std::logic_error("scalar product acquired an imaginary part");
  return s[0] / Scalar(2);
}

template <typename Scalar>
Scalar norm2(const Quaternion<Scalar>& q) {
  return q.coeffs().squaredNorm();
}

template <typename Scalar>
Quaternion<Scalar> inverse(const Quaternion<Scalar>& q) {
  return conjugate(q) / norm2(q);
}

/// Reflection in the hyperplane orthogonal to alpha: -alpha conj(lambda) alpha / (alpha, alpha).
template <typename Scalar>
Quaternion<Scalar> reflect(const Quaternion<Scalar>& alpha, const Quaternion<Scalar>& lambda) {
  return -(alpha * conjugate(lambda) * alpha) / scalar_product(alpha, alpha);
}

/// Reflection as lambda - 2 (lambda, alpha) / (alpha, alpha) alpha.
template <typename Scalar>
Quaternion<Scalar> reflect_classical(const Quaternion<Scalar>& alpha,
                                     const Quaternion<Scalar>& lambda) {
  return lambda - alpha * (Scalar(2) * scalar_product(lambda, alpha) / scalar_product(alpha, alpha));
}

std::string to_string(const Quat& q);
std::string pretty(const Quat& q);
std::size_t hash_value(const Quat& q);

inline std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << to_string(q); }

}  // namespace f4

template <>
struct std::hash<f4::Quat> {
  std::size_t operator()(const f4::Quat& q) const { return f4::hash_value(q); }
};
