#include "doctest.h"

#include <set>

#include "kdvspec/cli.hpp"
#include "kdvspec/text.hpp"

using namespace kdvspec;
using namespace kdvspec::cli;

namespace {

JobSpec job(std::string cmd, std::string family = "", unsigned s = 0) {
  JobSpec j;
  j.command = std::move(cmd);
  j.family = std::move(family);
  if (s) j.s = s;
  return j;
}

// Keys whose values are labels rather than formulas.
const std::set<std::string> kLabels{"tower", "label", "kind", "classification", "generator", "upsilon_display"};

int roundtrip_failures(const nlohmann::json& v, const std::string& key, std::vector<std::string>& bad) {
  int n = 0;
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) n += roundtrip_failures(it.value(), it.key(), bad);
  } else if (v.is_array()) {
    for (const auto& e : v) n += roundtrip_failures(e, key, bad);
  } else if (v.is_string() && !kLabels.count(key)) {
    const std::string s = v.get<std::string>();
    bool ok = false;
    try {
      ok = parse_ratfun(s).str() == s;
    } catch (const std::exception&) {
    }
    if (!ok) {
      ++n;
      bad.push_back(key + ": " + s);
    }
  }
  return n;
}

}  // namespace

TEST_CASE("curve --family rational --s 2") {
  ResultDoc d = run_command(job("curve", "rational", 2));
  CHECK(d.exit_code == Ok);
  CHECK(d.stages["curve"]["f"] == "-lambda^5 - mu^2");
  CHECK(d.checks["curve.shape"] == true);
}

TEST_CASE("solve --family rosen-morse --s 1") {
  ResultDoc d = run_command(job("solve", "rosen-morse", 1));
  CHECK(d.exit_code == Ok);
  CHECK(d.stages["solve"]["classification"] == "integer");
  CHECK(d.checks["solve.verified"] == true);
}

TEST_CASE("specialize --family rational --s 1 --lambda0 -1 --mu0 -1") {
  JobSpec j = job("specialize", "rational", 1);
  j.lambda0 = "-1";
  j.mu0 = "-1";
  ResultDoc d = run_command(j);
  CHECK(d.exit_code == Ok);
  CHECK(d.stages["specialize"]["phi0"] == "(x^2 - x + 1)/(x^2 - x)");
  CHECK(d.checks["specialize.factorization"] == true);
}

TEST_CASE("specialize by parameter value") {
  JobSpec j = job("specialize", "rational", 1);
  j.tau0 = "1";
  ResultDoc d = run_command(j);
  CHECK(d.exit_code == Ok);
  CHECK(d.stages["specialize"]["psi"]["upsilon_display"] == "((x - 1)/x) * exp(x)");
  CHECK(d.checks["specialize.solution_verified"] == true);
}

TEST_CASE("custom potentials") {
  JobSpec j = job("level");
  j.potential = "-2/cosh(x)^2";
  j.tower = "exponential";
  ResultDoc d = run_command(j);
  CHECK(d.exit_code == Ok);
  CHECK(d.stages["potential"]["u"] == "(-8*eta^2)/(eta^4 + 2*eta^2 + 1)");
  CHECK(d.stages["level"]["cbar"][0] == "1");

  JobSpec w = job("factor");
  w.potential = "2*wp";
  w.tower = "weierstrass";
  w.g2 = "144";
  w.g3 = "0";
  CHECK(run_command(w).exit_code == Ok);
}

TEST_CASE("exit codes") {
  JobSpec syntax = job("curve");
  syntax.potential = "6/x^";
  ResultDoc d = run_command(syntax);
  CHECK(d.exit_code == ParseFailed);
  CHECK(d.error.rfind("parse: SyntaxError", 0) == 0);

  JobSpec unknown = job("curve");
  unknown.potential = "lambda/x^2";
  CHECK(run_command(unknown).exit_code == ParseFailed);

  JobSpec two = job("curve", "rational", 1);
  two.potential = "2/x^2";
  CHECK(run_command(two).exit_code == ParseFailed);

  JobSpec off = job("specialize", "rational", 1);
  off.lambda0 = "1";
  off.mu0 = "1";
  CHECK(run_command(off).exit_code == ParseFailed);

  ResultDoc e = run_command(job("solve", "elliptic", 1));
  CHECK(e.exit_code == Unsupported);
  CHECK(e.error.rfind("solve: UnsupportedTower", 0) == 0);
  CHECK(e.checks["parametrize.riccati"] == true);
  CHECK(run_command(job("parametrize", "elliptic", 2)).exit_code == Unsupported);
  CHECK(run_command(job("bogus", "rational", 1)).exit_code == ParseFailed);
}

TEST_CASE("a false check gives exit code 2") {
  ResultDoc d = run_command(job("curve", "rational", 1));
  REQUIRE(d.exit_code == Ok);
  d.checks["curve.shape"] = false;
  settle_exit_code(d);
  CHECK(d.exit_code == CheckFailed);
}

TEST_CASE("opposite sheet keeps every invariant") {
  JobSpec j = job("verify", "rational", 1);
  j.sign = 1;
  ResultDoc d = run_command(j);
  CHECK(d.exit_code == Ok);
  CHECK_FALSE(d.checks.contains("golden.phit"));
  bool any_false = false;
  for (auto it = d.checks.begin(); it != d.checks.end(); ++it) any_false = any_false || !it.value().get<bool>();
  CHECK_FALSE(any_false);
}

TEST_CASE("verify reports discrepancy warnings") {
  ResultDoc d = run_command(job("verify", "elliptic", 1));
  CHECK(d.exit_code == Ok);
  CHECK(d.checks["golden.phi_printed_rejected"] == true);
  CHECK(d.checks["solve.unsupported_tower"] == true);
  CHECK_FALSE(d.warnings.empty());
}

TEST_CASE("determinism") {
  for (const char* cmd : {"factor", "solve", "verify"}) {
    CAPTURE(cmd);
    JobSpec j = job(cmd, "rosen-morse", 2);
    CHECK(run_command(j).json(false) == run_command(j).json(false));
  }
}

TEST_CASE("round-trip of emitted formulas") {
  std::vector<JobSpec> jobs{job("verify", "rational", 2), job("verify", "rosen-morse", 2), job("verify", "elliptic", 1),
                            job("factor", "elliptic", 2), job("hierarchy", "", 3)};
  JobSpec sp = job("specialize", "rosen-morse", 1);
  sp.tau0 = "1/2";
  jobs.push_back(sp);
  for (const auto& j : jobs) {
    CAPTURE(j.command);
    CAPTURE(j.family);
    ResultDoc d = run_command(j);
    REQUIRE(d.error.empty());
    std::vector<std::string> bad;
    CHECK(roundtrip_failures(d.stages, "", bad) == 0);
    for (const auto& b : bad) MESSAGE(b);
  }
}

TEST_CASE("argv entry point") {
  const char* argv[] = {"kdvspec", "curve", "--family", "rational", "--s", "2", "--format", "json", "--no-timings"};
  CHECK(main_entry(9, const_cast<char**>(argv)) == Ok);
  const char* neg[] = {"kdvspec", "specialize", "--family", "rational", "--s", "1", "--lambda0", "-1", "--mu0", "-1"};
  CHECK(main_entry(10, const_cast<char**>(neg)) == Ok);
  const char* bad[] = {"kdvspec", "curve", "--s", "x"};
  CHECK(main_entry(4, const_cast<char**>(bad)) == ParseFailed);
}
