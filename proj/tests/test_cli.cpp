#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrank/cli.hpp"

using qrank::run_cli;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string strip_runtimes(std::string s) {
  s = std::regex_replace(s, std::regex("\"runtime_ms\": [0-9]+"), "\"runtime_ms\": 0");
  return std::regex_replace(s, std::regex("runtime_ms=[0-9]+"), "runtime_ms=0");
}

}  // namespace

TEST_CASE("verify emits a json report and exit code 0") {
  const CliResult r = run({"verify", "phiid", "--order", "80", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == "1.0");
  REQUIRE(doc["checks"].size() == 1);
  CHECK(doc["checks"][0]["check_id"] == "phiid");
  CHECK(doc["checks"][0]["order"] == 80);
  CHECK(doc["checks"][0]["status"] == "pass");
  CHECK(doc["checks"][0].contains("runtime_ms"));
  CHECK(doc["summary"]["total"] == 1);
  CHECK(doc["summary"]["passed"] == 1);
  CHECK(doc["summary"]["failed"] == 0);
}

TEST_CASE("verify maogf agrees with the oracle through the cli") {
  const CliResult r = run({"verify", "maogf", "--order", "40"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] maogf") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"verify", "bogus"}).code == 2);
  CHECK(run({"scan", "9"}).code == 2);
  CHECK(run({"coeffs", "nope"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "phiid", "--format", "yaml"}).code == 2);
  CHECK(run({"verify", "phiid", "--order", "-4"}).code == 2);
  CHECK(run({"coeffs", "d", "--order", "-1"}).code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--help"}).code == 0);
}

TEST_CASE("a failing check exits 1") {
  // at order 5 no negative coefficient exists yet, so the negative-coeffs
  // observation honestly fails
  const CliResult r = run({"verify", "conclusion", "--order", "5", "--format", "json"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["summary"]["failed"] == 1);
}

TEST_CASE("scan reports holds-to-order, never pass") {
  const CliResult r = run({"scan", "7", "--max-n", "40"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[HOLDS-TO-ORDER] conjecture-7") != std::string::npos);
  CHECK(r.out.find("[PASS]") == std::string::npos);

  const CliResult j = run({"scan", "2", "--max-n", "30", "--format", "json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["checks"][0]["status"] == "holds-to-order");
  CHECK(doc["summary"]["conjectures_held"] == 1);

  const CliResult nn = run({"scan", "nonneg", "--max-n", "60"});
  CHECK(nn.code == 0);
  CHECK(nn.out.find("[HOLDS-TO-ORDER] conclusion-nonneg-q12") != std::string::npos);
}

TEST_CASE("coeffs csv matches the pinned rows") {
  const CliResult lam = run({"coeffs", "lambert-6-3", "--order", "0", "--format", "csv"});
  CHECK(lam.code == 0);
  CHECK(lam.out == "exponent,numerator,denominator\n0,1,2\n");

  const CliResult d = run({"coeffs", "d", "--order", "5"});
  CHECK(d.code == 0);
  CHECK(d.out ==
        "exponent,numerator,denominator\n"
        "0,1,1\n1,1,1\n2,1,1\n3,1,1\n4,2,1\n5,1,1\n");

  const CliResult phi2 = run({"coeffs", "phi2-sum", "--order", "2", "--format", "csv"});
  CHECK(phi2.code == 0);
  CHECK(phi2.out ==
        "exponent,numerator,denominator\n"
        "0,2,1\n1,4,1\n2,4,1\n");
}

TEST_CASE("coeffs json exposes exact numerator and denominator") {
  const CliResult r = run({"coeffs", "lambert-18-9", "--order", "8", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["series"] == "lambert-18-9");
  CHECK(doc["min_exp"] == -1);
  REQUIRE(!doc["coefficients"].empty());
  CHECK(doc["coefficients"][0]["exponent"] == -1);
  CHECK(doc["coefficients"][0]["numerator"] == "1");
  CHECK(doc["coefficients"][0]["denominator"] == "2");
}

TEST_CASE("output is byte-deterministic apart from runtimes") {
  const std::vector<std::string> args = {"verify", "maogf", "--order", "30", "--format", "json"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  CHECK(a.code == 0);
  CHECK(strip_runtimes(a.out) == strip_runtimes(b.out));

  const std::vector<std::string> text_args = {"verify", "gfprop", "--order", "10"};
  const CliResult c = run(text_args);
  const CliResult d = run(text_args);
  CHECK(c.code == 0);
  CHECK(strip_runtimes(c.out) == strip_runtimes(d.out));
}

TEST_CASE("parallel jobs preserve the canonical report order") {
  const CliResult serial =
      run({"verify", "all", "--order", "30", "--format", "json", "--jobs", "1"});
  const CliResult parallel =
      run({"verify", "all", "--order", "30", "--format", "json", "--jobs", "4"});
  CHECK(serial.code == parallel.code);
  CHECK(strip_runtimes(serial.out) == strip_runtimes(parallel.out));
}
