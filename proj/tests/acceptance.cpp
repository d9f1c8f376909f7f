// Acceptance battery: one PASS/FAIL line per criterion 1-10, then the structural
// invariants and the errata evidence. Exit status is nonzero when any line fails.

#include "f4/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::optional<int> criterion;
  std::uint64_t seed = f4::kDefaultSeed;
  if (const char* s = std::getenv("F4_TEST_SEED")) seed = std::strtoull(s, nullptr, 10);
  bool verbose = false;
  app.add_option("--criterion", criterion, "1-10, or 0 for invariants and 11 for errata")
      ->check(CLI::Range(0, f4::kErrata));
  app.add_option("--seed", seed, "seed for randomized checks (default F4_TEST_SEED)");
  app.add_flag("-v,--verbose", verbose, "list every check");
  CLI11_PARSE(app, argc, argv);

  std::vector<int> numbers;
  if (criterion) {
    numbers.push_back(*criterion);
  } else {
    for (int n = 1; n <= f4::kCriteria; ++n) numbers.push_back(n);
    numbers.push_back(f4::kInvariants);
    numbers.push_back(f4::kErrata);
  }

  std::cout << "seed " << seed << "\n";
  bool ok = true;
  for (int n : numbers) {
    const f4::Report r = f4::run_report(n, seed);
    std::cout << f4::render(r, verbose) << std::flush;
    ok &= r.passed();
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
