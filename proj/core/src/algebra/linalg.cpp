#include "g2l/algebra/linalg.hpp"

namespace g2l {

LaurentPoly charpoly(const Matrix<LaurentPoly>& m, const std::string& var) {
  detail::require_square(m.rows(), m.cols(), "charpoly");
  if (m.rows() == 0) return LaurentPoly(1);
  for (const auto& x : m.data()) {
    if (x.involves(var)) {
      throw std::invalid_argument("charpoly: variable '" + var + "' already occurs in the matrix");
    }
  }
  Matrix<LaurentPoly> a = -m;
  const LaurentPoly t = LaurentPoly::variable(var);
  for (std::size_t i = 0; i < m.rows(); ++i) a(i, i) = a(i, i) + t;
  return det(a);
}

LaurentPoly charpoly(const Matrix<Rational>& m, const std::string& var) {
  return charpoly(lift<LaurentPoly>(m), var);
}

}  // namespace g2l
