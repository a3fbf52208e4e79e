// Acceptance suite: one line per criterion, full sizes, wall-clock budgets
// enforced.

#include "ggp/verify.hpp"

#include "ggp/numeric.hpp"

#include <cstdio>

int main() {
  int failed = 0;
  ggp::run_verification(ggp::VerifyLevel::full, {}, [&](const ggp::CheckResult& r) {
    const char* status = r.ok() ? "PASS" : "FAIL";
    std::printf("%-4s %-5s %-50s %8.3fs / %4.0fs  %s%s\n", status, r.id.c_str(), r.title.c_str(), r.seconds,
                r.budget_seconds, r.within_budget ? "" : "[over budget] ", r.detail.c_str());
    std::fflush(stdout);
    failed += !r.ok();
  });
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
