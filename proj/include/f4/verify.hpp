#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace f4 {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct Report {
  /// 1-10 for the acceptance criteria; 0 for structural invariants, 11 for errata evidence.
  int number;
  std::string title;
  std::vector<Check> checks;

  bool passed() const;
  /// Names of failed checks, comma separated.
  std::string failures() const;
};

inline constexpr int kCriteria = 10;
inline constexpr int kInvariants = 0;
inline constexpr int kErrata = 11;
inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// Runs one report: 0, 1..10 or 11. Throws std::out_of_range for other numbers.
Report run_report(int number, std::uint64_t seed = kDefaultSeed);
/// Invariants, criteria 1-10, then errata evidence.
std::vector<Report> run_all(std::uint64_t seed = kDefaultSeed);

std::string render(const Report& r, bool verbose);

}  // namespace f4
