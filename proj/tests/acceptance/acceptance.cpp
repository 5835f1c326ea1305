// One line per acceptance criterion; failing checks are listed under it.
// Exits non-zero when any criterion fails.

#include <cstdio>
#include <exception>

#include "lawvere/tools/suites.hpp"

using namespace lawvere;

int main() {
  int failed = 0;
  for (int id = 1; id <= suites::kCriterionCount; ++id) {
    suites::CriterionReport r;
    try {
      r = suites::run_criterion(id);
    } catch (const std::exception& e) {
      std::printf("[FAIL] %d: aborted: %s\n", id, e.what());
      ++failed;
      continue;
    }
    std::printf("[%s] %d %s: %s (%.2fs, budget %.0fs)\n", r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.summary.c_str(), r.seconds, r.budget_seconds);
    for (const auto& c : r.checks)
      if (!c.pass) std::printf("       failed check %s: %s\n", c.name.c_str(), c.detail.c_str());
    if (!r.within_budget()) std::printf("       over budget\n");
    failed += !r.pass();
  }
  std::printf("%d of %d criteria pass\n", suites::kCriterionCount - failed, suites::kCriterionCount);
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
