#pragma once

#include "f4/field.hpp"
#include "f4/quaternion.hpp"
#include "f4/verify.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace f4::test {

/// F4_TEST_SEED when set, else the fixed default.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("F4_TEST_SEED")) return std::strtoull(s, nullptr, 10);
  return kDefaultSeed;
}

inline FieldScalar random_scalar(std::mt19937_64& rng, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 12);
  return FieldScalar::fraction(num(rng), den(rng)) +
         FieldScalar::fraction(num(rng), den(rng)) * FieldScalar::sqrt2();
}

inline Quat random_quat(std::mt19937_64& rng) {
  return {random_scalar(rng), random_scalar(rng), random_scalar(rng), random_scalar(rng)};
}

inline Eigen::Vector4d to_vec(const Quat& q) {
  return {q[0].to_double(), q[1].to_double(), q[2].to_double(), q[3].to_double()};
}

inline std::string seed_note() { return "seed " + std::to_string(seed()); }

}  // namespace f4::test
