#include "g2l/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace g2l {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "info";
}

void VerificationReport::set_parameter(const std::string& key, const std::string& value) {
  for (auto& [k, v] : params_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  params_.emplace_back(key, value);
}

void VerificationReport::check(bool ok, std::string name, std::string detail,
                               std::string counterexample) {
  Check c{std::move(name), ok ? Status::pass : Status::fail, std::move(detail), std::nullopt};
  if (!ok && !counterexample.empty()) c.counterexample = std::move(counterexample);
  checks_.push_back(std::move(c));
}

void VerificationReport::info(std::string name, std::string detail) {
  checks_.push_back(Check{std::move(name), Status::info, std::move(detail), std::nullopt});
}

void VerificationReport::add_typo(TypoEntry t) {
  if (std::find(typos_.begin(), typos_.end(), t) == typos_.end()) typos_.push_back(std::move(t));
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + copy.name;
    checks_.push_back(std::move(copy));
  }
  for (const auto& t : other.typos_) add_typo(t);
  for (const auto& a : other.artifacts_) artifacts_.push_back(a);
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::fail; }));
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks_) {
    if (c.status == Status::fail) return &c;
  }
  return nullptr;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["status"] = passed() ? "pass" : "fail";
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params_) params[k] = v;
  j["parameters"] = params;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["detail"] = c.detail;
    if (c.counterexample) cj["counterexample"] = *c.counterexample;
    checks.push_back(std::move(cj));
  }
  j["checks"] = checks;
  nlohmann::ordered_json typos = nlohmann::ordered_json::array();
  for (const auto& t : typos_) {
    typos.push_back({{"location", t.location}, {"printed", t.printed}, {"resolution", t.resolution}});
  }
  j["typo_ledger"] = typos;
  nlohmann::ordered_json arts = nlohmann::ordered_json::object();
  for (const auto& a : artifacts_) arts[a.name] = a.entries;
  j["artifacts"] = arts;
  return j.dump(indent);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "== suite " << suite_ << " [" << (passed() ? "PASS" : "FAIL") << "]\n";
  for (const auto& [k, v] : params_) os << "   " << k << " = " << v << "\n";
  for (const auto& c : checks_) {
    os << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << " :: " << c.detail;
    os << "\n";
    if (c.counterexample) os << "      counterexample: " << *c.counterexample << "\n";
  }
  for (const auto& a : artifacts_) {
    os << "  matrix " << a.name << ":\n";
    for (const auto& row : a.entries) {
      os << "    ";
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? ", " : "") << row[k];
      os << "\n";
    }
  }
  if (!typos_.empty()) {
    os << "  typo ledger:\n";
    for (const auto& t : typos_) {
      os << "    - " << t.location << ": printed '" << t.printed << "' -> " << t.resolution << "\n";
    }
  }
  return os.str();
}

}  // namespace g2l
