#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrank/laurent_series.hpp"

namespace qrank {

// Theorem-grade checks report pass/fail; finite-order scans of open
// conjectures report holds-to-order/counterexample and never "pass".
enum class CheckStatus { pass, fail, holds_to_order, counterexample };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::holds_to_order: return "holds-to-order";
    case CheckStatus::counterexample: return "counterexample";
  }
  return "unknown";
}

/// Outcome of one verification. status == fail if and only if
/// first_discrepancy is present.
struct CheckReport {
  std::string check_id;
  exp_t order = 0;
  CheckStatus status = CheckStatus::pass;
  std::optional<Discrepancy> first_discrepancy;
  std::optional<std::vector<exp_t>> witnesses;
  long long runtime_ms = 0;
};

}  // namespace qrank
