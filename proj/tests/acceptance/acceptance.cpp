#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "g2l/g2model/iwasawa.hpp"
#include "g2l/g2model/lie.hpp"
#include "g2l/lfunc/identities.hpp"
#include "g2l/orbits/orbits.hpp"

using namespace g2l;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Folds reports into an outcome; the detail names the first failing check.
Outcome from_reports(const std::vector<VerificationReport>& reports, std::string summary = {}) {
  Outcome o;
  o.detail = std::move(summary);
  for (const auto& r : reports) {
    if (const Check* f = r.first_failure()) {
      o.ok = false;
      o.detail = r.suite() + ": " + std::to_string(r.failures()) + " failing check(s), first: " + f->name + (f->counterexample ? " (" + *f->counterexample + ")" : "");
      return o;
    }
  }
  return o;
}

std::string parameter(const VerificationReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.parameters())
    if (k == key) return v;
  return {};
}

Outcome proposition_both_cases() {
  std::vector<VerificationReport> reps{proposition_check(PlaceCase::split, 12),
                                       proposition_check(PlaceCase::nonsplit, 12)};
  auto o = from_reports(reps);
  if (!o.ok) return o;
  const auto expected = label(reconstructed_zeta_triple());
  for (const auto& r : reps) {
    if (parameter(r, "zeta_triple") != expected) {
      return {false, r.suite() + " selected '" + parameter(r, "zeta_triple") + "'"};
    }
  }
  return {true, "winning triple " + expected + " in both cases"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Lie-model suite", 10, [] { return from_reports({verify_lie_models()}); }},
      {2, "Iwasawa suite", 10, [] { return from_reports({verify_iwasawa()}); }},
      {3, "Poincare lemma to degree 10", 60, [] { return from_reports({poincare_oracle(10)}); }},
      {4, "split and non-split identities to degree 12", 30,
       [] { return from_reports({split_identity_check(12), nonsplit_identity_check(12)}); }},
      {5, "L-factor suite", 10,
       [] { return from_reports({verify_lfactor(PlaceCase::split), verify_lfactor(PlaceCase::nonsplit)}); }},
      {6, "inner integral closed form for v(c) in [-3, 8]", 5,
       [] { return from_reports({inner_integral_check(-3, 8)}); }},
      {7, "unramified computation, both cases, degree 12", 120, proposition_both_cases},
  };
  criteria.push_back({8, "double coset analogue for q in {5, 7}, square and non-square rho", 240, [] {
                        Outcome o;
                        for (auto [q, rho] : {std::pair{5u, 2u}, {5u, 4u}, {7u, 3u}, {7u, 2u}}) {
                          const auto t0 = std::chrono::steady_clock::now();
                          const auto rep = double_coset_check(q, rho);
                          const double secs =
                              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                          std::string orbits;
                          for (const auto& c : rep.checks())
                            if (c.name == "exactly two P(F_q)-orbits") orbits = c.detail;
                          const auto part = from_reports({rep});
                          const bool ok = part.ok && secs < 60;
                          char head[96];
                          std::snprintf(head, sizeof head, "(q=%u, rho=%u) %s %.2f s: ", q, rho,
                                        ok ? "ok" : "FAILED", secs);
                          if (!o.detail.empty()) o.detail += "; ";
                          o.detail += head + (part.ok ? orbits : part.detail);
                          o.ok = o.ok && ok;
                        }
                        return o;
                      }});

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit_seconds);
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " " << c.title << " [" << timing << "]";
    if (!in_time) std::cout << " time limit exceeded";
    if (!o.detail.empty()) std::cout << " :: " << o.detail;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion line(s) failed") << "\n";
  return failures == 0 ? 0 : 1;
}
