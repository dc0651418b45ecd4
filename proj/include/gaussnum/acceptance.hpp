#pragma once

#include <string>
#include <vector>

namespace gaussnum::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_passed = false;
  double seconds = 0;
  double time_limit = 0;  // seconds; 0 means no limit
  std::string detail;

  bool passed() const { return checks_passed && (time_limit <= 0 || seconds < time_limit); }
};

inline constexpr int kCriterionCount = 10;

/// Runs one numbered criterion (1..10); exceptions become a failed result.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

}  // namespace gaussnum::acceptance
