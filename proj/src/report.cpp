#include "qrank/report.hpp"

#include <ostream>
#include <sstream>

namespace qrank {

ReportSummary summarize(const ReportDocument& doc) {
  ReportSummary s;
  s.total = static_cast<int>(doc.checks.size());
  for (const CheckReport& c : doc.checks) {
    switch (c.status) {
      case CheckStatus::pass: ++s.passed; break;
      case CheckStatus::holds_to_order: ++s.conjectures_held; break;
      case CheckStatus::fail:
      case CheckStatus::counterexample: ++s.failed; break;
    }
  }
  return s;
}

int exit_code_for(const ReportDocument& doc) {
  return summarize(doc).failed == 0 ? 0 : 1;
}

namespace {

nlohmann::ordered_json rational_json(const Rational& r) {
  return {{"numerator", r.numerator().get_str()}, {"denominator", r.denominator().get_str()}};
}

}  // namespace

nlohmann::ordered_json to_json(const ReportDocument& doc) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckReport& c : doc.checks) {
    nlohmann::ordered_json j{
        {"check_id", c.check_id},
        {"order", c.order},
        {"status", to_string(c.status)},
    };
    if (c.first_discrepancy) {
      j["first_discrepancy"] = {{"exponent", c.first_discrepancy->exponent},
                                {"lhs", rational_json(c.first_discrepancy->lhs)},
                                {"rhs", rational_json(c.first_discrepancy->rhs)}};
    }
    if (c.witnesses) j["witnesses"] = *c.witnesses;
    j["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(j));
  }
  const ReportSummary s = summarize(doc);
  return nlohmann::ordered_json{{"schema_version", doc.schema_version},
                                {"checks", std::move(checks)},
                                {"summary",
                                 {{"total", s.total},
                                  {"passed", s.passed},
                                  {"failed", s.failed},
                                  {"conjectures_held", s.conjectures_held}}}};
}

std::string to_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "qrank report (schema " << doc.schema_version << ")\n";
  for (const CheckReport& c : doc.checks) {
    switch (c.status) {
      case CheckStatus::pass: os << "[PASS] "; break;
      case CheckStatus::fail: os << "[FAIL] "; break;
      case CheckStatus::holds_to_order: os << "[HOLDS-TO-ORDER] "; break;
      case CheckStatus::counterexample: os << "[COUNTEREXAMPLE] "; break;
    }
    os << c.check_id << " order=" << c.order;
    if (c.first_discrepancy) {
      os << " first discrepancy at q^" << c.first_discrepancy->exponent << ": lhs="
         << c.first_discrepancy->lhs.str() << " rhs=" << c.first_discrepancy->rhs.str();
    }
    if (c.witnesses && !c.witnesses->empty()) {
      os << " witnesses=";
      for (std::size_t i = 0; i < c.witnesses->size(); ++i) {
        if (i) os << ",";
        os << (*c.witnesses)[i];
      }
    }
    os << " runtime_ms=" << c.runtime_ms << "\n";
  }
  const ReportSummary s = summarize(doc);
  os << "summary: total=" << s.total << " passed=" << s.passed << " failed=" << s.failed
     << " conjectures_held=" << s.conjectures_held << "\n";
  return os.str();
}

void write_coefficients_csv(std::ostream& os, const LaurentSeries& s) {
  os << "exponent,numerator,denominator\n";
  for (exp_t e = s.min_exp(); e <= s.order(); ++e) {
    const Rational& c = s.coefficient(e);
    os << e << "," << c.numerator().get_str() << "," << c.denominator().get_str() << "\n";
  }
}

nlohmann::ordered_json coefficients_json(const std::string& name, const LaurentSeries& s) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (exp_t e = s.min_exp(); e <= s.order(); ++e) {
    const Rational& c = s.coefficient(e);
    rows.push_back({{"exponent", e},
                    {"numerator", c.numerator().get_str()},
                    {"denominator", c.denominator().get_str()}});
  }
  return nlohmann::ordered_json{
      {"series", name}, {"min_exp", s.min_exp()}, {"order", s.order()}, {"coefficients", std::move(rows)}};
}

}  // namespace qrank
