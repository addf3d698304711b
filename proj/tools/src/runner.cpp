#include "runner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <stdexcept>

#include "g2l/errata.hpp"
#include "g2l/g2model/iwasawa.hpp"
#include "g2l/g2model/lie.hpp"
#include "g2l/orbits/finite_field.hpp"
#include "g2l/orbits/orbits.hpp"

namespace g2l::cli {

namespace {

std::string case_suffix(PlaceCase c) { return to_string(c); }

std::vector<PlaceCase> cases(std::optional<PlaceCase> place) {
  if (place) return {*place};
  return {PlaceCase::split, PlaceCase::nonsplit};
}

std::string parameter(const VerificationReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.parameters())
    if (k == key) return v;
  return {};
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lie", "iwasawa", "identities", "lfactor", "integral", "orbits", "all"};
  return names;
}

VerificationReport lie_suite() { return verify_lie_models(); }

VerificationReport iwasawa_suite() { return verify_iwasawa(); }

VerificationReport identities_suite(int degree, int poincare_cap) {
  if (degree < 1) throw std::invalid_argument("--degree must be positive");
  VerificationReport rep("identities");
  rep.set_parameter("degree", std::to_string(degree));
  const int pdeg = std::min(degree, poincare_cap);
  rep.set_parameter("poincare_degree", std::to_string(pdeg));
  rep.absorb(poincare_oracle(pdeg, poincare_cap), "poincare: ");
  rep.absorb(split_identity_check(degree), "split: ");
  rep.absorb(nonsplit_identity_check(degree), "nonsplit: ");
  return rep;
}

VerificationReport lfactor_suite(std::optional<PlaceCase> place) {
  VerificationReport rep("lfactor");
  rep.set_parameter("case", place ? to_string(*place) : "split,nonsplit");
  for (auto c : cases(place)) rep.absorb(verify_lfactor(c), case_suffix(c) + ": ");
  return rep;
}

VerificationReport integral_suite(std::optional<PlaceCase> place, int degree) {
  if (degree < 1) throw std::invalid_argument("--degree must be positive");
  VerificationReport rep("integral");
  rep.set_parameter("case", place ? to_string(*place) : "split,nonsplit");
  rep.set_parameter("degree", std::to_string(degree));
  for (auto c : cases(place)) {
    const auto prop = proposition_check(c, degree);
    rep.set_parameter("zeta_triple." + to_string(c), parameter(prop, "zeta_triple"));
    rep.absorb(prop, case_suffix(c) + ": ");
  }
  // Where the integrand is supported the shell sum follows the closed form;
  // for v(c) <= -2 it vanishes, which is reported without failing the suite.
  rep.absorb(inner_integral_check(-1, 8), "inner integral: ");
  for (int vc = -3; vc <= -2; ++vc) {
    rep.info("inner integral: v(c) = " + std::to_string(vc),
             "shell sum is " + inner_integral_shell_sum(vc).to_string() + "; the closed form is " +
                 (inner_integral_agrees(vc) ? "valid" : "not valid") + " here (integral vanishes)");
  }
  rep.add_typo(errata::inner_integral_domain());
  return rep;
}

VerificationReport orbits_suite(std::uint32_t q, std::optional<std::uint32_t> rho) {
  if (rho) return double_coset_check(q, *rho);
  if (!is_prime(q) || q < 5 || q > 255) throw std::invalid_argument("--q must be a prime with 5 <= q < 256");
  std::optional<std::uint32_t> square, non_square;
  for (std::uint32_t r = 1; r < q && (!square || !non_square); ++r) {
    auto& slot = is_square_mod(r, q) ? square : non_square;
    if (!slot) slot = r;
  }
  VerificationReport rep("orbits");
  rep.set_parameter("q", std::to_string(q));
  rep.set_parameter("rho", std::to_string(*non_square) + "," + std::to_string(*square));
  for (std::uint32_t r : {*non_square, *square}) rep.absorb(double_coset_check(q, r), "rho = " + std::to_string(r) + ": ");
  return rep;
}

std::vector<VerificationReport> run(const Options& opts) {
  const bool all = opts.suite == "all";
  std::vector<std::function<VerificationReport()>> jobs;
  if (all || opts.suite == "lie") jobs.emplace_back(lie_suite);
  if (all || opts.suite == "iwasawa") jobs.emplace_back(iwasawa_suite);
  if (all || opts.suite == "identities") {
    const int cap = all ? kPoincareMaxDegree : std::max(opts.degree, kPoincareMaxDegree);
    jobs.emplace_back([&opts, cap] { return identities_suite(opts.degree, cap); });
  }
  if (all || opts.suite == "lfactor") jobs.emplace_back([&opts] { return lfactor_suite(opts.place); });
  if (all || opts.suite == "integral") jobs.emplace_back([&opts] { return integral_suite(opts.place, opts.degree); });
  if (all || opts.suite == "orbits") jobs.emplace_back([&opts] { return orbits_suite(opts.q, opts.rho); });
  if (jobs.empty()) throw std::invalid_argument("unknown suite '" + opts.suite + "'");

  std::vector<VerificationReport> out;
  if (opts.parallel) {
    std::vector<std::future<VerificationReport>> futures;
    for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    for (auto& f : futures) out.push_back(f.get());
  } else {
    for (auto& job : jobs) out.push_back(job());
  }
  return out;
}

std::string render(const std::vector<VerificationReport>& reports, const Options& opts) {
  bool ok = true;
  std::vector<TypoEntry> ledger;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    for (const auto& t : r.typo_ledger())
      if (std::find(ledger.begin(), ledger.end(), t) == ledger.end()) ledger.push_back(t);
  }
  if (opts.format == Format::text) {
    std::string s;
    for (const auto& r : reports) s += r.to_text();
    s += std::string("== overall ") + (ok ? "PASS" : "FAIL") + " (" + std::to_string(reports.size()) + " suites, " +
         std::to_string(ledger.size()) + " typo ledger entries)\n";
    return s;
  }
  nlohmann::ordered_json doc;
  doc["tool"] = "g2l";
  doc["command"] = "verify " + opts.suite;
  if (opts.timestamp) doc["generated_at"] = utc_now();
  doc["status"] = ok ? "pass" : "fail";
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& r : reports) suites.push_back(nlohmann::ordered_json::parse(r.to_json()));
  doc["suites"] = suites;
  nlohmann::ordered_json typos = nlohmann::ordered_json::array();
  for (const auto& t : ledger)
    typos.push_back({{"location", t.location}, {"printed", t.printed}, {"resolution", t.resolution}});
  doc["typo_ledger"] = typos;
  return doc.dump(2) + "\n";
}

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the local computations behind a Rankin-Selberg integral for SU(2,1) in G2"};
  app.require_subcommand(1);
  Options opts;
  std::string place;
  std::string format = "text";
  std::uint32_t rho = 0;

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", opts.suite, "Suite to run")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--degree", opts.degree, "Truncation degree of series identities")->capture_default_str();
  verify->add_option("--case", place, "Place type: split or nonsplit (default: both)")
      ->check(CLI::IsMember({"split", "nonsplit"}));
  verify->add_option("--q", opts.q, "Residue field size for the orbit count")->capture_default_str();
  auto* rho_opt = verify->add_option("--rho", rho, "Unit rho mod q (default: a non-square and a square)");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  auto* out_opt = verify->add_option("--out", "Write the report to this path instead of stdout");
  verify->add_flag("--no-timestamp", "Omit the generated_at field from JSON output");
  verify->add_flag("--parallel", opts.parallel, "Run suites concurrently (report order is fixed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (!place.empty()) opts.place = place == "split" ? PlaceCase::split : PlaceCase::nonsplit;
  if (rho_opt->count() > 0) opts.rho = rho;
  opts.format = format == "json" ? Format::json : Format::text;
  if (out_opt->count() > 0) opts.out = out_opt->as<std::string>();
  opts.timestamp = verify->count("--no-timestamp") == 0;

  std::vector<VerificationReport> reports;
  try {
    reports = run(opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << verify->help();
    return kExitUsage;
  }
  const std::string text = render(reports, opts);
  if (opts.out) {
    std::ofstream f(*opts.out);
    if (!f) {
      std::cerr << "error: cannot write " << *opts.out << "\n";
      return kExitUsage;
    }
    f << text;
  } else {
    std::cout << text;
  }
  for (const auto& r : reports)
    if (!r.passed()) return kExitFailure;
  return kExitPass;
}

}  // namespace g2l::cli
