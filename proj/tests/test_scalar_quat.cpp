#include <doctest.h>

#include "support.hpp"

#include <Eigen/Dense>

#include <cmath>

using namespace f4;
using f4::test::random_quat;
using f4::test::random_scalar;
using f4::test::to_vec;

TEST_CASE("field parsing of literal forms") {
  const FieldScalar s = FieldScalar::sqrt2();
  CHECK(FieldScalar::parse("1+2sqrt2") == 1 + 2 * s);
  CHECK(FieldScalar::parse("3/2 - 1/4*sqrt2") == FieldScalar::fraction(3, 2) - FieldScalar::fraction(1, 4) * s);
  CHECK(FieldScalar::parse("1/sqrt2") == s / 2);
  CHECK(FieldScalar::parse("(1+sqrt2)/2") == (1 + s) / 2);
  CHECK(FieldScalar::parse("3/2(1+sqrt2)") == FieldScalar::fraction(3, 2) * (1 + s));
  CHECK(FieldScalar::parse("-sqrt2") == -s);
  CHECK_THROWS(FieldScalar::parse("sqrt3"));
  CHECK_THROWS(FieldScalar::parse("1/0"));
  CHECK_THROWS(FieldScalar::parse(""));
}

TEST_CASE("fractions are kept in lowest terms") {
  CHECK(FieldScalar::fraction(-2, 6) == FieldScalar::fraction(-1, 3));
  CHECK(FieldScalar::fraction(8, -4) == FieldScalar(-2));
  CHECK_THROWS_AS(FieldScalar::fraction(1, 0), std::domain_error);
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(FieldScalar(1) / FieldScalar(0), std::domain_error);
  CHECK_FALSE(checked_div(FieldScalar(1), FieldScalar(0)).has_value());
  CHECK_FALSE(FieldScalar(0).inverse().has_value());
}

TEST_CASE("field axioms and the floating-point oracle on seeded samples") {
  std::mt19937_64 rng(test::seed());
  INFO(test::seed_note());
  for (int trial = 0; trial < 300; ++trial) {
    const FieldScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(std::abs((a * b).to_double() - a.to_double() * b.to_double()) <= 1e-9 * (1 + std::abs(a.to_double() * b.to_double())));
    REQUIRE(((a < b) == (a.to_double() < b.to_double()) || std::abs(a.to_double() - b.to_double()) < 1e-12));
    // The field norm is multiplicative.
    REQUIRE((a * b).norm() == a.norm() * b.norm());
    if (!a.is_zero()) REQUIRE(a * *a.inverse() == FieldScalar(1));
    REQUIRE(FieldScalar::parse(a.str()) == a);
    REQUIRE(FieldScalar::parse(a.pretty()) == a);
    const auto root = exact_sqrt(a * a);
    REQUIRE(root.has_value());
    REQUIRE(*root == abs(a));
  }
}

TEST_CASE("exact square roots") {
  const FieldScalar s = FieldScalar::sqrt2();
  CHECK(exact_sqrt(3 + 2 * s) == 1 + s);
  CHECK(exact_sqrt(FieldScalar(2)) == s);
  CHECK_FALSE(exact_sqrt(FieldScalar(3)).has_value());
  CHECK_FALSE(exact_sqrt(FieldScalar(-4)).has_value());
}

namespace {

// Left multiplication by q as a 4x4 matrix, written out from i^2 = j^2 = k^2 = ijk = -1.
Eigen::Matrix4d left_matrix(const Eigen::Vector4d& q) {
  const double a = q(0), b = q(1), c = q(2), d = q(3);
  Eigen::Matrix4d m;
  m << a, -b, -c, -d,
       b, a, -d, c,
       c, d, a, -b,
       d, -c, b, a;
  return m;
}

}  // namespace

TEST_CASE("Hamilton product against the matrix oracle") {
  const Quat e1 = Quat::unit(1), e2 = Quat::unit(2), e3 = Quat::unit(3);
  CHECK(e1 * e2 == e3);
  CHECK(e2 * e3 == e1);
  CHECK(e3 * e1 == e2);
  CHECK(e2 * e1 == -e3);
  CHECK(e1 * e1 == -Quat::identity());

  std::mt19937_64 rng(test::seed() + 1);
  INFO(test::seed_note());
  for (int trial = 0; trial < 200; ++trial) {
    const Quat p = random_quat(rng), q = random_quat(rng), r = random_quat(rng);
    const Eigen::Vector4d want = left_matrix(to_vec(p)) * to_vec(q);
    REQUIRE((to_vec(p * q) - want).norm() <= 1e-9 * (1 + want.norm()));
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(norm2(p * q) == norm2(p) * norm2(q));
    REQUIRE(conjugate(p * q) == conjugate(q) * conjugate(p));
    if (!p.is_zero()) REQUIRE(p * inverse(p) == Quat::identity());
  }
}

TEST_CASE("quaternionic reflection agrees with the classical formula") {
  std::mt19937_64 rng(test::seed() + 2);
  INFO(test::seed_note());
  for (int trial = 0; trial < 1000; ++trial) {
    Quat alpha = random_quat(rng);
    if (alpha.is_zero()) continue;
    const Quat lambda = random_quat(rng);
    const Quat r = reflect(alpha, lambda);
    REQUIRE(r == reflect_classical(alpha, lambda));
    REQUIRE(reflect(alpha, r) == lambda);
    REQUIRE(reflect(alpha, alpha) == -alpha);
    REQUIRE(norm2(r) == norm2(lambda));
  }
  CHECK_THROWS(reflect(Quat(), Quat::identity()));
}
