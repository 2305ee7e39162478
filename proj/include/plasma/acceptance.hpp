#pragma once

#include <string>
#include <vector>

namespace plasma {

struct CheckLine {
  std::string text;
  bool pass = true;
  bool informational = false;  // printed, never counted
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckLine> checks;

  bool pass() const;
  std::string summary() const;  // "C05 FAIL series identities: ..."
};

inline constexpr int kCriterionCount = 12;

// Runs criterion `id` (1-based). Numeric exceptions are reported as failures.
CriterionResult run_criterion(int id);

}  // namespace plasma
