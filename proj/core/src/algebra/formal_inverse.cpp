#include "g2l/algebra/formal_inverse.hpp"

#include <stdexcept>

namespace g2l {

FormalInverse::FormalInverse(std::string name, LaurentPoly value)
    : name_(std::move(name)), value_(std::move(value)) {
  if (value_.involves(name_)) {
    throw std::invalid_argument("FormalInverse: value must not involve '" + name_ + "'");
  }
  if (value_.is_zero()) throw std::domain_error("FormalInverse: inverse of zero");
}

LaurentPoly FormalInverse::reduce(const LaurentPoly& p) const {
  if (!p.involves(name_)) return p;
  const auto parts = p.collect({name_});
  const int top = p.max_exponent(name_);
  // p = sum_j c_j n^j = (sum_j c_j N^(top-j)) n^top
  LaurentPoly cleared;
  for (const auto& [e, c] : parts) cleared += c * value_.pow(top - e[0]);
  int e = top;
  if (e <= 0) return cleared * value_.pow(-e);
  while (e > 0 && !cleared.is_zero()) {
    auto q = cleared.exact_divide(value_);
    if (!q) break;
    cleared = std::move(*q);
    --e;
  }
  if (cleared.is_zero()) return LaurentPoly();
  return cleared * symbol().pow(e);
}

LaurentPoly InverseRelations::reduce(const LaurentPoly& p) const {
  LaurentPoly r = p;
  for (const auto& rel : rels_) r = rel.reduce(r);
  return r;
}

Matrix<LaurentPoly> InverseRelations::reduce(const Matrix<LaurentPoly>& m) const {
  return m.map([this](const LaurentPoly& x) { return reduce(x); });
}

bool InverseRelations::equal(const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b) const {
  return !first_difference(a, b).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> InverseRelations::first_difference(
    const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b) const {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::make_pair(std::size_t{0}, std::size_t{0});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j) - b(i, j))) return std::make_pair(i + 1, j + 1);
  return std::nullopt;
}

}  // namespace g2l
