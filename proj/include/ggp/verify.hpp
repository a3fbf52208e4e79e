#pragma once

// The end-to-end verification suite: every published sequence and identity
// checked against frozen values and independent computation paths, each
// under a wall-clock budget.

#include "ggp/parallel.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ggp {

enum class VerifyLevel {
  quick,  // reduced sizes, about a minute in total
  full,   // the complete acceptance sizes
};

struct CheckResult {
  std::string id;     // "AC1" .. "AC11"
  std::string title;
  bool passed = false;
  bool within_budget = true;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;

  bool ok() const { return passed && within_budget; }
};

using CheckCallback = std::function<void(const CheckResult&)>;

/// Runs every check in order; `on_result` (if set) sees each result as soon
/// as it is available.
std::vector<CheckResult> run_verification(VerifyLevel level, const ExecConfig& exec = {},
                                          const CheckCallback& on_result = {});

}  // namespace ggp
