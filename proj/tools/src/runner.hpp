#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2l/lfunc/identities.hpp"
#include "g2l/report.hpp"

namespace g2l::cli {

enum class Format { text, json };

struct Options {
  std::string suite;  // lie, iwasawa, identities, lfactor, integral, orbits, all
  int degree = 12;
  std::optional<PlaceCase> place;  // unset: both cases
  std::uint32_t q = 5;
  std::optional<std::uint32_t> rho;  // unset: one non-square and one square unit
  Format format = Format::text;
  std::optional<std::string> out;
  bool timestamp = true;
  bool parallel = false;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Suite names accepted by `verify`.
const std::vector<std::string>& suite_names();

VerificationReport lie_suite();
VerificationReport iwasawa_suite();
VerificationReport identities_suite(int degree, int poincare_cap);
VerificationReport lfactor_suite(std::optional<PlaceCase> place);
VerificationReport integral_suite(std::optional<PlaceCase> place, int degree);
VerificationReport orbits_suite(std::uint32_t q, std::optional<std::uint32_t> rho);

/// Runs the suites selected by `opts`, in fixed order. Throws
/// std::invalid_argument for parameter errors.
std::vector<VerificationReport> run(const Options& opts);

/// The output document: suites, overall status and the merged typo ledger.
std::string render(const std::vector<VerificationReport>& reports, const Options& opts);

/// Full command-line entry point; returns the process exit code.
int main(int argc, char** argv);

}  // namespace g2l::cli
