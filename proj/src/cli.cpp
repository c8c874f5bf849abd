#include "qrank/cli.hpp"

#include <exception>
#include <functional>
#include <future>
#include <ostream>
#include <semaphore>
#include <utility>

#include <CLI11.hpp>

#include "qrank/report.hpp"
#include "qrank/verify.hpp"

namespace qrank {

namespace {

struct CheckTask {
  std::string name;
  std::function<std::vector<CheckReport>()> run;
};

// Canonical ordering: elementary identities, then the series identities,
// then oracle-backed checks, then the conjecture-style scans. Checks with a
// brute-force oracle in the loop default to lower orders than pure series
// identities.
std::vector<CheckTask> make_tasks(const std::string& check, bool order_set, exp_t order) {
  auto ord = [&](exp_t fallback) { return order_set ? order : fallback; };
  std::vector<CheckTask> tasks;
  auto want = [&](const char* name) { return check == "all" || check == name; };
  auto single = [](std::function<CheckReport()> fn) {
    return [fn = std::move(fn)]() { return std::vector<CheckReport>{fn()}; };
  };
  if (want("elementary")) {
    const exp_t o = ord(500);
    tasks.push_back({"elementary", single([o] { return check_elementary_identities(o); })});
  }
  if (want("phiid")) {
    const exp_t o = ord(500);
    tasks.push_back({"phiid", single([o] { return check_phiid(o); })});
  }
  if (want("baruah-barman")) {
    const exp_t o = ord(500);
    tasks.push_back({"baruah-barman", single([o] { return check_baruah_barman(o); })});
  }
  if (want("maogf")) {
    const exp_t o = ord(100);
    tasks.push_back({"maogf", single([o] { return check_maogf(o); })});
  }
  if (want("gfprop")) {
    const exp_t o = ord(80);
    tasks.push_back({"gfprop", single([o] { return check_gfprop(o); })});
  }
  if (want("main-theorem")) {
    const exp_t o = ord(500);
    tasks.push_back({"main-theorem", single([o] { return check_main_theorem(o); })});
  }
  if (want("dyson")) {
    const int k = static_cast<int>(ord(10));
    tasks.push_back({"dyson", [k] { return check_dyson_equidistribution(k); }});
  }
  if (want("ramanujan")) {
    const exp_t o = ord(100);
    tasks.push_back(
        {"ramanujan", single([o] { return check_ramanujan_congruences(static_cast<int>(o)); })});
  }
  if (want("conclusion")) {
    const exp_t o = ord(300);
    tasks.push_back({"conclusion", [o] { return conclusion_checks(o); }});
  }
  return tasks;
}

ReportDocument run_tasks(std::vector<CheckTask> tasks, int jobs) {
  std::vector<std::vector<CheckReport>> results(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i].run();
  } else {
    std::counting_semaphore<> gate(jobs);
    std::vector<std::future<void>> futures;
    futures.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      futures.push_back(std::async(std::launch::async, [&, i] {
        gate.acquire();
        try {
          results[i] = tasks[i].run();
        } catch (...) {
          gate.release();
          throw;
        }
        gate.release();
      }));
    }
    for (auto& f : futures) f.get();
  }
  ReportDocument doc;
  for (auto& r : results)
    for (auto& c : r) doc.checks.push_back(std::move(c));
  return doc;
}

LaurentSeries named_series(const std::string& name, exp_t order) {
  if (name == "d") return d_series(static_cast<int>(order));
  if (name == "mao-rhs") return mao_gf_rhs(order);
  if (name == "gfprop-rhs") return gfprop_rhs(order);
  if (name == "phi2-sum") return phi2_sum(order);
  if (name == "phi2-ratio") return phi2_ratio(order);
  if (name == "lambert-6-3") return lambert_sum(LambertSpec{6, 3, 0, 6, 0, 1, true}, order);
  if (name == "lambert-18-9") return lambert_sum(LambertSpec{18, 9, -1, 18, 0, 1, true}, order);
  throw Error(ErrorKind::invalid_parameter, "unknown series " + name);
}

void emit_report(const ReportDocument& doc, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << to_json(doc).dump(2) << "\n";
  else
    out << to_text(doc);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact q-series engine and partition-rank verification suite"};
  app.require_subcommand(1);

  const std::vector<std::string> check_names = {"elementary", "maogf",        "gfprop",
                                                "phiid",      "baruah-barman", "main-theorem",
                                                "dyson",      "ramanujan",    "conclusion",
                                                "all"};
  const std::vector<std::string> series_names = {"d",          "mao-rhs",   "gfprop-rhs",
                                                 "phi2-sum",   "phi2-ratio", "lambert-6-3",
                                                 "lambert-18-9"};
  const std::vector<std::string> scan_names = {"1", "2", "3", "4", "5", "6", "7", "nonneg"};

  std::string check, series, scan_id;
  exp_t order = 500;
  int max_n = 100;
  int jobs = 1;
  std::string verify_format = "text", coeffs_format = "csv", scan_format = "text";

  CLI::App* verify = app.add_subcommand("verify", "run named checks and report pass/fail");
  verify->add_option("check", check,
                     "elementary, maogf, gfprop, phiid, baruah-barman, main-theorem, dyson, "
                     "ramanujan, conclusion, or all")
      ->required()
      ->check(CLI::IsMember(check_names));
  auto* order_opt = verify->add_option(
      "--order", order,
      "truncation order / oracle bound (default 500; oracle-backed checks default lower: "
      "maogf 100, gfprop 80, ramanujan 100, conclusion 300, dyson 10 = max k)");
  order_opt->check(CLI::NonNegativeNumber);
  verify->add_option("--format", verify_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", jobs, "max checks evaluated concurrently")->check(CLI::PositiveNumber);

  CLI::App* coeffs = app.add_subcommand("coeffs", "dump exact coefficients of a named series");
  coeffs->add_option("series", series,
                     "d, mao-rhs, gfprop-rhs, phi2-sum, phi2-ratio, lambert-6-3 or lambert-18-9 "
                     "(lambert-18-9 is the sum with numerator exponent 18n^2+9n-1 over "
                     "1+q^{18n}; lambert-6-3 has numerator exponent 6n^2+3n over 1+q^{6n})")
      ->required()
      ->check(CLI::IsMember(series_names));
  auto* coeffs_order_opt = coeffs->add_option("--order", order, "truncation order (default 500)");
  coeffs_order_opt->check(CLI::NonNegativeNumber);
  coeffs->add_option("--format", coeffs_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* scan = app.add_subcommand("scan", "scan a conjectured inequality over the oracle range");
  scan->add_option("id", scan_id, "conjecture 1..7 or nonneg")
      ->required()
      ->check(CLI::IsMember(scan_names));
  scan->add_option("--max-n", max_n, "largest scanned argument / order (default 100)")
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--format", scan_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      ReportDocument doc = run_tasks(make_tasks(check, order_opt->count() > 0, order), jobs);
      emit_report(doc, verify_format, out);
      return exit_code_for(doc);
    }
    if (coeffs->parsed()) {
      const exp_t o = coeffs_order_opt->count() > 0 ? order : 500;
      const LaurentSeries s = named_series(series, o);
      if (coeffs_format == "json")
        out << coefficients_json(series, s).dump(2) << "\n";
      else
        write_coefficients_csv(out, s);
      return 0;
    }
    if (scan->parsed()) {
      ReportDocument doc;
      if (scan_id == "nonneg") {
        doc.checks.push_back(conclusion_checks(max_n)[1]);
      } else {
        doc.checks.push_back(conjecture_scan(std::stoi(scan_id), max_n));
      }
      emit_report(doc, scan_format, out);
      return exit_code_for(doc);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qrank
