#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2l/algebra/laurent.hpp"

namespace g2l {

/// Multivariate power series cut at a total-degree bound in a designated set
/// of series variables. Every other variable is carried exactly.
class TruncatedSeries {
 public:
  TruncatedSeries(LaurentPoly poly, std::vector<std::string> series_vars, int bound);

  const LaurentPoly& poly() const { return poly_; }
  const std::vector<std::string>& series_variables() const { return vars_; }
  int bound() const { return bound_; }

  /// Homogeneous part of the given series degree.
  LaurentPoly part(int degree) const { return poly_.homogeneous_part(vars_, degree); }
  /// Coefficient of a monomial in the series variables (exponents aligned with series_variables()).
  LaurentPoly coefficient(const std::vector<int>& exps) const { return poly_.coefficient(vars_, exps); }

  /// Multiplicative inverse; the degree-0 part must be a nonzero rational or a Laurent unit.
  TruncatedSeries inverse() const;

  /// Series-variable exponents of the first monomial (lowest degree, then lexicographic)
  /// where the two series differ, with both coefficients.
  struct Difference {
    std::vector<int> exponents;
    LaurentPoly lhs;
    LaurentPoly rhs;
  };
  std::optional<Difference> first_difference(const TruncatedSeries& o) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !a.first_difference(b).has_value();
  }

  std::string to_string() const;

 private:
  void check_compatible(const TruncatedSeries& o) const;

  LaurentPoly poly_;
  std::vector<std::string> vars_;
  int bound_;
};

/// Power-series expansion of numerator/denominator in `vars`, truncated at total degree `bound`.
/// Throws std::domain_error naming the denominator when its constant term is not invertible.
TruncatedSeries series_expand(const LaurentPoly& numerator, const LaurentPoly& denominator,
                              const std::vector<std::string>& vars, int bound);

}  // namespace g2l
