// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cstdio>

#include "gaussnum/acceptance.hpp"

int main() {
  using gaussnum::acceptance::run_criterion;
  int failed = 0;
  for (int id = 1; id <= gaussnum::acceptance::kCriterionCount; ++id) {
    const auto r = run_criterion(id);
    std::printf("[%s] AC%-2d %-44s %8.2fs", r.passed() ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
    if (r.time_limit > 0) std::printf(" (limit %.0fs)", r.time_limit);
    std::printf("  %s\n", r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed()) ++failed;
  }
  std::printf("%d/%d criteria passed\n", gaussnum::acceptance::kCriterionCount - failed,
              gaussnum::acceptance::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
