#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "support.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::cout << "property seed " << f4::test::seed() << " (set F4_TEST_SEED to change)\n";
  doctest::Context context(argc, argv);
  return context.run();
}
