#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <string_view>

namespace f4 {

using Rational = mpq_class;

/// Exact element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
class FieldScalar {
 public:
  FieldScalar() = default;
  template <std::integral I>
  FieldScalar(I value) : rat_(static_cast<long>(value)) {}
  explicit FieldScalar(const Rational& rat) : rat_(rat) { rat_.canonicalize(); }
  FieldScalar(const Rational& rat, const Rational& surd) : rat_(rat), surd_(surd) {
    rat_.canonicalize();
    surd_.canonicalize();
  }

  static FieldScalar sqrt2() { return {Rational(0), Rational(1)}; }
  static FieldScalar fraction(long num, long den) {
    if (den == 0) throw std::domain_error("fraction with zero denominator");
    return FieldScalar(Rational(num, den));
  }

  /// Parses "3/2 - 1/4*sqrt2", "1+2sqrt2", "(1+sqrt2)/2", "1/sqrt2" and similar.
  static FieldScalar parse(std::string_view text);

  const Rational& rat() const { return rat_; }
  const Rational& surd() const { return surd_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }
  int sign() const;

  /// Galois conjugate a - b*sqrt(2).
  FieldScalar conjugate() const { return {rat_, -surd_}; }
  /// Field norm a^2 - 2b^2.
  Rational norm() const { return rat_ * rat_ - 2 * surd_ * surd_; }
  std::optional<FieldScalar> inverse() const;

  double to_double() const;

  /// Canonical text, e.g. "3/2 - 1/4*sqrt2".
  std::string str() const;
  /// Compact text, e.g. "3/2-(1/4)sqrt2" or "2sqrt2".
  std::string pretty() const;

  FieldScalar operator-() const { return {-rat_, -surd_}; }
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  /// Throws std::domain_error on a zero divisor; see checked_div.
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    return a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }
  friend std::strong_ordering operator<=>(const FieldScalar& a, const FieldScalar& b);

  friend std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.str(); }

 private:
  Rational rat_{0};
  Rational surd_{0};
};

std::optional<FieldScalar> checked_div(const FieldScalar& a, const FieldScalar& b);
/// Exact square root inside Q(sqrt 2) when one exists with nonnegative value.
std::optional<FieldScalar> exact_sqrt(const FieldScalar& x);
FieldScalar abs(const FieldScalar& x);

std::size_t hash_value(const FieldScalar& x);

}  // namespace f4

template <>
struct std::hash<f4::FieldScalar> {
  std::size_t operator()(const f4::FieldScalar& x) const { return f4::hash_value(x); }
};

namespace Eigen {

template <>
struct NumTraits<f4::FieldScalar> : GenericNumTraits<f4::FieldScalar> {
  using Real = f4::FieldScalar;
  using NonInteger = f4::FieldScalar;
  using Literal = f4::FieldScalar;
  using Nested = f4::FieldScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
