#pragma once

#include <string>
#include <vector>

#include "g2l/algebra/laurent.hpp"
#include "g2l/algebra/matrix.hpp"

namespace g2l {

/// A variable adjoined as the inverse of a non-monomial polynomial, e.g.
/// Ninv = 1/(a^2 - b^2 rho). Expressions are compared after clearing it.
class FormalInverse {
 public:
  FormalInverse(std::string name, LaurentPoly value);

  const std::string& name() const { return name_; }
  const LaurentPoly& value() const { return value_; }
  LaurentPoly symbol() const { return LaurentPoly::variable(name_); }

  /// Canonical form P * name^e with e >= 0, P free of `name`, and value() not
  /// dividing P when e > 0.
  LaurentPoly reduce(const LaurentPoly& p) const;
  bool is_zero(const LaurentPoly& p) const { return reduce(p).is_zero(); }

 private:
  std::string name_;
  LaurentPoly value_;
};

/// Several formal inverses applied in sequence.
class InverseRelations {
 public:
  InverseRelations() = default;
  explicit InverseRelations(std::vector<FormalInverse> rels) : rels_(std::move(rels)) {}

  void add(FormalInverse r) { rels_.push_back(std::move(r)); }
  LaurentPoly reduce(const LaurentPoly& p) const;
  bool is_zero(const LaurentPoly& p) const { return reduce(p).is_zero(); }
  bool equal(const LaurentPoly& a, const LaurentPoly& b) const { return is_zero(a - b); }
  Matrix<LaurentPoly> reduce(const Matrix<LaurentPoly>& m) const;
  bool equal(const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b) const;
  /// Row/column (1-based) of the first entry where a and b differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(
      const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b) const;

 private:
  std::vector<FormalInverse> rels_;
};

}  // namespace g2l
