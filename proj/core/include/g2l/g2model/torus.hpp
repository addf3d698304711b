#pragma once

#include <string>

#include "g2l/algebra/formal_inverse.hpp"
#include "g2l/algebra/matrix.hpp"

namespace g2l {

/// a^2 - b^2 rho, the norm of a + b sqrt(rho).
LaurentPoly norm_form(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& rho);

/// The 8x8 matrix of the torus element with coordinates (a, b); `ninv` stands
/// for 1/N and is only meaningful together with a FormalInverse for N.
Matrix<LaurentPoly> torus_matrix(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& rho,
                                 const LaurentPoly& ninv);

/// Symbols a, b, rho and Ninv with the relation Ninv * (a^2 - b^2 rho) = 1.
struct TorusSymbols {
  LaurentPoly a = var("a");
  LaurentPoly b = var("b");
  LaurentPoly rho = var("rho");
  LaurentPoly ninv = var("Ninv");

  LaurentPoly norm() const { return norm_form(a, b, rho); }
  InverseRelations relations() const { return InverseRelations({FormalInverse("Ninv", norm())}); }
  Matrix<LaurentPoly> matrix() const { return torus_matrix(a, b, rho, ninv); }
};

}  // namespace g2l
