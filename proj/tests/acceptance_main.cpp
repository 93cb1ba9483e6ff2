// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance_tests              run every criterion
//   acceptance_tests --criterion 4
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "filmseries/acceptance.hpp"

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance_tests [--criterion N]\n";
      return 2;
    }
  }
  int failures = 0;
  for (int id = 1; id <= filmseries::kAcceptanceCriteria; ++id) {
    if (only != 0 && id != only) continue;
    const auto result = filmseries::run_criterion(id);
    std::cout << filmseries::format_result(result) << '\n';
    failures += result.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
