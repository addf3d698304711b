#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace g2l {

enum class Status { pass, fail, info };

std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string detail;
  std::optional<std::string> counterexample;
};

/// A discrepancy in the source formulas that a computation resolved.
struct TypoEntry {
  std::string location;
  std::string printed;
  std::string resolution;

  friend bool operator==(const TypoEntry&, const TypoEntry&) = default;
};

/// A matrix emitted alongside a report, entries as strings, row-major.
struct MatrixArtifact {
  std::string name;
  std::vector<std::vector<std::string>> entries;
};

/// Pass/fail record of one verification suite.
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<std::pair<std::string, std::string>>& parameters() const { return params_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<TypoEntry>& typo_ledger() const { return typos_; }
  const std::vector<MatrixArtifact>& artifacts() const { return artifacts_; }

  void set_parameter(const std::string& key, const std::string& value);
  void add(Check c) { checks_.push_back(std::move(c)); }
  /// Records `ok` as pass or fail; `counterexample` is kept only on failure.
  void check(bool ok, std::string name, std::string detail = {}, std::string counterexample = {});
  void info(std::string name, std::string detail);
  void add_typo(TypoEntry t);
  void add_artifact(MatrixArtifact m) { artifacts_.push_back(std::move(m)); }
  /// Appends checks, typos and artifacts of another report, prefixing check names.
  void absorb(const VerificationReport& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;
  /// First failing check, if any.
  const Check* first_failure() const;

  /// Stable JSON rendering (keys in insertion order).
  std::string to_json(int indent = 2) const;
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<Check> checks_;
  std::vector<TypoEntry> typos_;
  std::vector<MatrixArtifact> artifacts_;
};

}  // namespace g2l
