#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2l/algebra/rational.hpp"

namespace g2l {

/// Multivariate polynomial over the rationals with integer (possibly
/// negative) exponents.
///
/// Variables are kept as a sorted list of names; each term is keyed by a
/// dense exponent vector aligned with that list. Operands with different
/// variable lists are aligned by name before combining. Zero coefficients are
/// never stored.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  LaurentPoly() = default;
  LaurentPoly(Rational c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  LaurentPoly(I c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly variable(const std::string& name);
  /// coeff * prod vars[i]^exps[i]; `vars` need not be sorted.
  static LaurentPoly monomial(const std::vector<std::string>& vars, const std::vector<int>& exps,
                              Rational coeff = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// A single term c * x^e with c != 0, i.e. a unit of the Laurent ring.
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of the all-zero exponent vector.
  Rational constant_term() const;
  /// Value when the polynomial is constant; throws otherwise.
  Rational to_rational() const;

  /// Exponent of `name` in a term, 0 when the variable is absent.
  int exponent_of(const Exponents& e, const std::string& name) const;
  int max_exponent(const std::string& name) const;
  int min_exponent(const std::string& name) const;
  bool involves(const std::string& name) const;

  /// Largest / smallest total degree over `vars` across all terms (0 for zero).
  int max_degree(const std::vector<std::string>& vars) const;
  int min_degree(const std::vector<std::string>& vars) const;

  /// Drops every term whose total degree over `vars` exceeds `bound`.
  LaurentPoly truncated(const std::vector<std::string>& vars, int bound) const;
  /// Terms of total degree exactly `degree` over `vars`.
  LaurentPoly homogeneous_part(const std::vector<std::string>& vars, int degree) const;
  /// Product, keeping only terms of total degree <= bound over `vars`.
  LaurentPoly mul_truncated(const LaurentPoly& o, const std::vector<std::string>& vars,
                            int bound) const;

  /// Coefficient of prod vars[i]^exps[i], as a polynomial in the other variables.
  LaurentPoly coefficient(const std::vector<std::string>& vars, const std::vector<int>& exps) const;
  /// Groups terms by the exponents of `vars`; values are polynomials in the remaining variables.
  std::map<Exponents, LaurentPoly> collect(const std::vector<std::string>& vars) const;

  /// Negative powers are only defined for monomials.
  LaurentPoly pow(int e) const;
  /// Inverse of a monomial; throws std::domain_error otherwise.
  LaurentPoly inverse() const;

  LaurentPoly substitute(const std::string& name, const LaurentPoly& value) const;
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& values) const;
  /// Renames variables; targets must not collide with untouched names.
  LaurentPoly rename(const std::map<std::string, std::string>& names) const;
  /// Adams operation: every exponent vector scaled by j.
  LaurentPoly adams(int j) const;

  /// Quotient when `d` divides this polynomial exactly in the Laurent ring.
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& d) const;

  /// Removes variables that occur with exponent zero in every term.
  LaurentPoly compacted() const;
  /// Re-expresses over a superset of the current variables.
  LaurentPoly with_variables(const std::vector<std::string>& vars) const;

  std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  static std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                                  const std::vector<std::string>& b);

 private:
  LaurentPoly(std::vector<std::string> vars, TermMap terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {}

  std::vector<int> indices_of(const std::vector<std::string>& vars) const;
  int degree_of(const Exponents& e, const std::vector<int>& idx) const;
  void add_scaled(const LaurentPoly& o, const Rational& scale);

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Exact quotient or std::domain_error naming both operands.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Convenience: a polynomial ring variable.
inline LaurentPoly var(const std::string& name) { return LaurentPoly::variable(name); }

}  // namespace g2l
