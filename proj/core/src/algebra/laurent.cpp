#include "g2l/algebra/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace g2l {

namespace {

bool all_zero(const LaurentPoly::Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void add_term(LaurentPoly::TermMap& m, LaurentPoly::Exponents e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

LaurentPoly::LaurentPoly(Rational c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

LaurentPoly LaurentPoly::variable(const std::string& name) {
  return monomial({name}, {1});
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& vars, const std::vector<int>& exps,
                                  Rational coeff) {
  if (vars.size() != exps.size()) {
    throw std::invalid_argument("LaurentPoly::monomial: variable/exponent length mismatch");
  }
  std::map<std::string, int> acc;
  for (std::size_t i = 0; i < vars.size(); ++i) acc[vars[i]] += exps[i];
  std::vector<std::string> names;
  Exponents e;
  for (const auto& [n, x] : acc) {
    names.push_back(n);
    e.push_back(x);
  }
  TermMap t;
  if (!coeff.is_zero()) t.emplace(std::move(e), std::move(coeff));
  return LaurentPoly(std::move(names), std::move(t));
}

std::vector<std::string> LaurentPoly::merge_variables(const std::vector<std::string>& a,
                                                      const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LaurentPoly LaurentPoly::with_variables(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end() || *it != vars_[i]) {
      throw std::invalid_argument("LaurentPoly::with_variables: '" + vars_[i] +
                                  "' missing from target variable list");
    }
    where[i] = static_cast<std::size_t>(it - vars.begin());
  }
  TermMap t;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    t.emplace(std::move(ne), c);
  }
  return LaurentPoly(vars, std::move(t));
}

LaurentPoly LaurentPoly::compacted() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return *this;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) names.push_back(vars_[i]);
  }
  TermMap t;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(names.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) ne.push_back(e[i]);
    }
    t.emplace(std::move(ne), c);
  }
  return LaurentPoly(std::move(names), std::move(t));
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && all_zero(terms_.begin()->first));
}

Rational LaurentPoly::constant_term() const {
  for (const auto& [e, c] : terms_) {
    if (all_zero(e)) return c;
  }
  return Rational(0);
}

Rational LaurentPoly::to_rational() const {
  if (!is_constant()) throw std::domain_error("LaurentPoly: not a constant: " + to_string());
  return constant_term();
}

std::vector<int> LaurentPoly::indices_of(const std::vector<std::string>& vars) const {
  std::vector<int> idx;
  for (const auto& v : vars) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it != vars_.end() && *it == v) idx.push_back(static_cast<int>(it - vars_.begin()));
  }
  return idx;
}

int LaurentPoly::degree_of(const Exponents& e, const std::vector<int>& idx) const {
  int d = 0;
  for (int i : idx) d += e[static_cast<std::size_t>(i)];
  return d;
}

int LaurentPoly::exponent_of(const Exponents& e, const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return 0;
  return e[static_cast<std::size_t>(it - vars_.begin())];
}

bool LaurentPoly::involves(const std::string& name) const {
  for (const auto& [e, c] : terms_) {
    if (exponent_of(e, name) != 0) return true;
  }
  return false;
}

int LaurentPoly::max_exponent(const std::string& name) const { return max_degree({name}); }
int LaurentPoly::min_exponent(const std::string& name) const { return min_degree({name}); }

int LaurentPoly::max_degree(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return 0;
  const auto idx = indices_of(vars);
  int best = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e, idx));
  return best;
}

int LaurentPoly::min_degree(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return 0;
  const auto idx = indices_of(vars);
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, degree_of(e, idx));
  return best;
}

LaurentPoly LaurentPoly::truncated(const std::vector<std::string>& vars, int bound) const {
  const auto idx = indices_of(vars);
  TermMap t;
  for (const auto& [e, c] : terms_) {
    if (degree_of(e, idx) <= bound) t.emplace_hint(t.end(), e, c);
  }
  return LaurentPoly(vars_, std::move(t));
}

LaurentPoly LaurentPoly::homogeneous_part(const std::vector<std::string>& vars, int degree) const {
  const auto idx = indices_of(vars);
  TermMap t;
  for (const auto& [e, c] : terms_) {
    if (degree_of(e, idx) == degree) t.emplace_hint(t.end(), e, c);
  }
  return LaurentPoly(vars_, std::move(t));
}

LaurentPoly LaurentPoly::coefficient(const std::vector<std::string>& vars,
                                     const std::vector<int>& exps) const {
  if (vars.size() != exps.size()) {
    throw std::invalid_argument("LaurentPoly::coefficient: variable/exponent length mismatch");
  }
  std::vector<bool> selected(vars_.size(), false);
  std::vector<int> wanted(vars_.size(), 0);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), vars[k]);
    if (it == vars_.end() || *it != vars[k]) {
      if (exps[k] != 0) return LaurentPoly();
      continue;
    }
    const auto i = static_cast<std::size_t>(it - vars_.begin());
    selected[i] = true;
    wanted[i] = exps[k];
  }
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!selected[i]) rest.push_back(vars_[i]);
  }
  TermMap t;
  for (const auto& [e, c] : terms_) {
    bool match = true;
    for (std::size_t i = 0; i < e.size() && match; ++i) match = !selected[i] || e[i] == wanted[i];
    if (!match) continue;
    Exponents ne;
    ne.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!selected[i]) ne.push_back(e[i]);
    }
    t.emplace(std::move(ne), c);
  }
  return LaurentPoly(std::move(rest), std::move(t));
}

std::map<LaurentPoly::Exponents, LaurentPoly> LaurentPoly::collect(
    const std::vector<std::string>& vars) const {
  std::vector<int> pos(vars.size(), -1);
  std::vector<bool> selected(vars_.size(), false);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), vars[k]);
    if (it != vars_.end() && *it == vars[k]) {
      pos[k] = static_cast<int>(it - vars_.begin());
      selected[static_cast<std::size_t>(pos[k])] = true;
    }
  }
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!selected[i]) rest.push_back(vars_[i]);
  }
  std::map<Exponents, TermMap> groups;
  for (const auto& [e, c] : terms_) {
    Exponents key(vars.size(), 0);
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (pos[k] >= 0) key[k] = e[static_cast<std::size_t>(pos[k])];
    }
    Exponents ne;
    ne.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!selected[i]) ne.push_back(e[i]);
    }
    groups[std::move(key)].emplace(std::move(ne), c);
  }
  std::map<Exponents, LaurentPoly> out;
  for (auto& [k, t] : groups) out.emplace(k, LaurentPoly(rest, std::move(t)));
  return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Rational& scale) {
  if (o.vars_ != vars_) {
    auto vars = merge_variables(vars_, o.vars_);
    *this = with_variables(vars);
    add_scaled(o.with_variables(vars), scale);
    return;
  }
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c * scale);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, Rational(1));
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  if (a.vars_ != b.vars_) {
    auto vars = LaurentPoly::merge_variables(a.vars_, b.vars_);
    return a.with_variables(vars) * b.with_variables(vars);
  }
  LaurentPoly::TermMap t;
  const std::size_t n = a.vars_.size();
  LaurentPoly::Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      add_term(t, e, ca * cb);
    }
  }
  return LaurentPoly(a.vars_, std::move(t));
}

LaurentPoly LaurentPoly::mul_truncated(const LaurentPoly& o, const std::vector<std::string>& vars,
                                       int bound) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  if (vars_ != o.vars_) {
    auto merged = merge_variables(vars_, o.vars_);
    return with_variables(merged).mul_truncated(o.with_variables(merged), vars, bound);
  }
  const auto idx = indices_of(vars);
  std::vector<std::pair<const Exponents*, int>> rhs;
  rhs.reserve(o.terms_.size());
  for (const auto& [e, c] : o.terms_) rhs.emplace_back(&e, degree_of(e, idx));
  TermMap t;
  const std::size_t n = vars_.size();
  Exponents e(n);
  auto it_b = o.terms_.begin();
  for (const auto& [ea, ca] : terms_) {
    const int da = degree_of(ea, idx);
    it_b = o.terms_.begin();
    for (std::size_t k = 0; k < rhs.size(); ++k, ++it_b) {
      if (da + rhs[k].second > bound) continue;
      const auto& eb = *rhs[k].first;
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      add_term(t, e, ca * it_b->second);
    }
  }
  return LaurentPoly(vars_, std::move(t));
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto vars = LaurentPoly::merge_variables(a.vars_, b.vars_);
  return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_monomial()) {
    throw std::domain_error("LaurentPoly: '" + to_string() + "' is not a unit (monomial)");
  }
  const auto& [e, c] = *terms_.begin();
  Exponents ne(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
  TermMap t;
  t.emplace(std::move(ne), c.inverse());
  return LaurentPoly(vars_, std::move(t));
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (is_monomial()) {
    const auto& [ex, c] = *terms_.begin();
    Exponents ne(ex.size());
    for (std::size_t i = 0; i < ex.size(); ++i) ne[i] = ex[i] * e;
    TermMap t;
    t.emplace(std::move(ne), c.pow(e));
    return LaurentPoly(vars_, std::move(t));
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  unsigned u = static_cast<unsigned>(e);
  while (u != 0) {
    if (u & 1U) result = result * base;
    u >>= 1U;
    if (u != 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(const std::string& name, const LaurentPoly& value) const {
  return substitute(std::map<std::string, LaurentPoly>{{name, value}});
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& values) const {
  std::vector<int> which(vars_.size(), -1);
  std::vector<const LaurentPoly*> vals;
  std::vector<std::string> rest;
  std::vector<std::size_t> rest_pos;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) {
      which[i] = static_cast<int>(vals.size());
      vals.push_back(&it->second);
    } else {
      rest.push_back(vars_[i]);
      rest_pos.push_back(i);
    }
  }
  if (vals.empty()) return *this;
  std::vector<std::map<int, LaurentPoly>> power_cache(vals.size());
  auto power = [&](std::size_t k, int e) -> const LaurentPoly& {
    auto& cache = power_cache[k];
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, vals[k]->pow(e)).first;
    return it->second;
  };
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(rest.size());
    for (std::size_t p : rest_pos) ne.push_back(e[p]);
    TermMap t;
    t.emplace(std::move(ne), c);
    LaurentPoly term(rest, std::move(t));
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (which[i] >= 0 && e[i] != 0) term = term * power(static_cast<std::size_t>(which[i]), e[i]);
    }
    out += term;
  }
  return out;
}

LaurentPoly LaurentPoly::rename(const std::map<std::string, std::string>& names) const {
  std::map<std::string, LaurentPoly> values;
  for (const auto& [from, to] : names) values.emplace(from, variable(to));
  return substitute(values);
}

LaurentPoly LaurentPoly::adams(int j) const {
  TermMap t;
  for (const auto& [e, c] : terms_) {
    Exponents ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] * j;
    add_term(t, std::move(ne), c);
  }
  return LaurentPoly(vars_, std::move(t));
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly();
  if (d.is_monomial()) return *this * d.inverse();
  const auto vars = merge_variables(vars_, d.vars_);
  const LaurentPoly f = with_variables(vars);
  const LaurentPoly g = d.with_variables(vars);
  const std::size_t n = vars.size();

  // Shift both to genuine polynomials with g free of monomial factors; the
  // quotient of the shifted pair is then itself a polynomial.
  Exponents fmin(n, std::numeric_limits<int>::max());
  Exponents gmin(n, std::numeric_limits<int>::max());
  for (const auto& [e, c] : f.terms_) {
    for (std::size_t i = 0; i < n; ++i) fmin[i] = std::min(fmin[i], e[i]);
  }
  for (const auto& [e, c] : g.terms_) {
    for (std::size_t i = 0; i < n; ++i) gmin[i] = std::min(gmin[i], e[i]);
  }
  auto shift = [n](const TermMap& m, const Exponents& by, int sign) {
    TermMap out;
    for (const auto& [e, c] : m) {
      Exponents ne(n);
      for (std::size_t i = 0; i < n; ++i) ne[i] = e[i] + sign * by[i];
      out.emplace_hint(out.end(), std::move(ne), c);
    }
    return out;
  };
  TermMap rem = shift(f.terms_, fmin, -1);
  const TermMap div = shift(g.terms_, gmin, -1);
  const auto& [lead_e, lead_c] = *div.rbegin();
  const Rational lead_inv = lead_c.inverse();

  TermMap quot;
  Exponents te(n);
  Exponents pe(n);
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      te[i] = re[i] - lead_e[i];
      if (te[i] < 0) return std::nullopt;
    }
    const Rational tc = rc * lead_inv;
    add_term(quot, te, tc);
    for (const auto& [de, dc] : div) {
      for (std::size_t i = 0; i < n; ++i) pe[i] = de[i] + te[i];
      add_term(rem, pe, -(tc * dc));
    }
  }
  Exponents net(n);
  for (std::size_t i = 0; i < n; ++i) net[i] = fmin[i] - gmin[i];
  return LaurentPoly(vars, shift(quot, net, +1)).compacted();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.exact_divide(b);
  if (!q) {
    throw std::domain_error("LaurentPoly: " + b.to_string() + " does not divide " + a.to_string());
  }
  return *q;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = all_zero(e);
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (constant || !mag.is_one()) {
      os << mag.to_string();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace g2l
