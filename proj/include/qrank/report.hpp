#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrank/check_report.hpp"

namespace qrank {

/// Machine-readable envelope for a batch of checks. Exit code 0 iff no
/// check failed and no counterexample was found.
struct ReportDocument {
  std::string schema_version = "1.0";
  std::vector<CheckReport> checks;
};

struct ReportSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;  // fail or counterexample
  int conjectures_held = 0;
};

ReportSummary summarize(const ReportDocument& doc);
int exit_code_for(const ReportDocument& doc);

/// Deterministic rendering; runtime_ms is the only field allowed to vary
/// between identical runs.
nlohmann::ordered_json to_json(const ReportDocument& doc);
std::string to_text(const ReportDocument& doc);

void write_coefficients_csv(std::ostream& os, const LaurentSeries& s);
nlohmann::ordered_json coefficients_json(const std::string& name, const LaurentSeries& s);

}  // namespace qrank
