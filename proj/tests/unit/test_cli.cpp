#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "runner.hpp"

using namespace g2l;
using namespace g2l::cli;

namespace {

int exit_code(const std::string& args) {
  const std::string cmd = std::string(G2L_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(exit_code("verify lie") == kExitPass);
  CHECK(exit_code("verify orbits --q 5 --rho 2") == kExitPass);
  CHECK(exit_code("verify nonsense") == kExitUsage);
  CHECK(exit_code("verify lie --no-such-flag") == kExitUsage);
  CHECK(exit_code("") == kExitUsage);
  CHECK(exit_code("verify lfactor --case both") == kExitUsage);
  CHECK(exit_code("verify orbits --q 9") == kExitUsage);
  CHECK(exit_code("verify orbits --q 5 --rho 5") == kExitUsage);
  CHECK(exit_code("verify identities --degree 0") == kExitUsage);
  CHECK(exit_code("--help") == kExitPass);
}

TEST_CASE("identities at degree 8") {
  Options opts;
  opts.suite = "identities";
  opts.degree = 8;
  const auto reports = run(opts);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].passed());
  CHECK(reports[0].suite() == "identities");
}

TEST_CASE("orbit suite reports two parabolic orbits") {
  const auto rep = orbits_suite(5, 2);
  CHECK(rep.passed());
  bool found = false;
  for (const auto& c : rep.checks()) found = found || (c.name == "exactly two P(F_q)-orbits" && c.status == Status::pass);
  CHECK(found);
  const auto both = orbits_suite(5, std::nullopt);
  CHECK(both.passed());
}

TEST_CASE("integral suite names the winning zeta triple") {
  const auto rep = integral_suite(PlaceCase::nonsplit, 8);
  CHECK(rep.passed());
  bool named = false;
  for (const auto& [k, v] : rep.parameters()) named = named || (k == "zeta_triple.nonsplit" && v == "zeta(3s) zeta(6s-2) zeta(9s-3)");
  CHECK(named);
}

TEST_CASE("verify all produces one deterministic JSON document") {
  const std::string a = "g2l_cli_all_a.json", b = "g2l_cli_all_b.json";
  REQUIRE(exit_code("verify all --format json --no-timestamp --out " + a) == kExitPass);
  REQUIRE(exit_code("verify all --format json --no-timestamp --parallel --out " + b) == kExitPass);
  const auto text = slurp(a);
  CHECK(text == slurp(b));
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["status"] == "pass");
  CHECK_FALSE(doc.contains("generated_at"));
  REQUIRE(doc["suites"].size() == 6);
  const std::vector<std::string> names{"lie", "iwasawa", "identities", "lfactor", "integral", "orbits"};
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(doc["suites"][i]["suite"] == names[i]);
  CHECK(doc["typo_ledger"].size() >= 5);
  for (const auto& t : doc["typo_ledger"]) {
    CHECK(t.contains("location"));
    CHECK(t.contains("printed"));
    CHECK(t.contains("resolution"));
  }
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("timestamp is present unless suppressed") {
  Options opts;
  opts.suite = "lie";
  opts.format = Format::json;
  const auto reports = run(opts);
  CHECK(nlohmann::json::parse(render(reports, opts)).contains("generated_at"));
  opts.timestamp = false;
  CHECK_FALSE(nlohmann::json::parse(render(reports, opts)).contains("generated_at"));
}
