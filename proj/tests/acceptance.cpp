// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Optional arguments restrict the run to the listed criterion ids.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "esz/claims.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const bool ok = esz::claims::run_all(std::cout, only);
  std::cout << (ok ? "ALL PASS" : "SOME CRITERIA FAILED") << '\n';
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
