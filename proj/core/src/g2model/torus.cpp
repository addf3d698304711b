#include "g2l/g2model/torus.hpp"

namespace g2l {

LaurentPoly norm_form(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& rho) {
  return a * a - b * b * rho;
}

Matrix<LaurentPoly> torus_matrix(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& rho,
                                 const LaurentPoly& ninv) {
  const LaurentPoly z;
  const LaurentPoly aa = a * a * ninv;
  const LaurentPoly ab = a * b * ninv;
  const LaurentPoly bb = b * b * ninv;
  return Matrix<LaurentPoly>::from_rows({
      {a, -b, z, z, z, z, z, z},
      {-b * rho, a, z, z, z, z, z, z},
      {z, z, aa, -ab, -ab, -bb, z, z},
      {z, z, -ab * rho, aa, bb * rho, ab, z, z},
      {z, z, -ab * rho, bb * rho, aa, ab, z, z},
      {z, z, -bb * rho * rho, ab * rho, ab * rho, aa, z, z},
      {z, z, z, z, z, z, a * ninv, b * ninv},
      {z, z, z, z, z, z, b * rho * ninv, a * ninv},
  });
}

}  // namespace g2l
