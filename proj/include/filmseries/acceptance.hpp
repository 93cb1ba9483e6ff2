#pragma once

#include <string>
#include <vector>

namespace filmseries {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Measured values behind the verdict.
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kAcceptanceCriteria = 10;

/// Runs criterion 1..kAcceptanceCriteria. Throws std::out_of_range otherwise.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance();

/// "PASS [3] title: detail (0.012 s)"
std::string format_result(const CriterionResult& result);

}  // namespace filmseries
