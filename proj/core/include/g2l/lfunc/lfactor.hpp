#pragma once

#include <string>
#include <vector>

#include "g2l/algebra/series.hpp"
#include "g2l/reps/adjoint.hpp"

namespace g2l {

/// The series variable x = q^(-3s+1) and the residue cardinality q.
inline const std::string kX = "x";
inline const std::string kQ = "q";

/// det(1 - x r(class)) as a polynomial in x (r' when `twisted`).
LaurentPoly l_factor_denominator(const SatakeClass& c, bool twisted = false);

/// det(1 - x r(class))^-1 expanded in x to degree `bound`.
TruncatedSeries local_l_factor(const SatakeClass& c, int bound, bool twisted = false);

/// (1 - mu^2 x)(1 - mu^2 x^2)(1 - x^2)(1 - mu^-2 x)(1 - mu^-2 x^2).
LaurentPoly nonsplit_product_denominator(const LaurentPoly& mu);

/// zeta(c1 s + c0) = (1 - q^-(c1 s + c0))^-1 written as (1 - q^e x^(c1/3))^-1
/// with e = -c0 - c1/3; the returned polynomial is 1 - q^e x^(c1/3).
/// Throws std::invalid_argument unless 3 divides c1 > 0.
LaurentPoly zeta_denominator(int c1, int c0);

struct ZetaArgument {
  int c1 = 0;
  int c0 = 0;

  std::string label() const;
};
using ZetaTriple = std::vector<ZetaArgument>;

/// zeta(3s) zeta(6s-2) zeta(3s-9) as printed, and zeta(3s) zeta(6s-2) zeta(9s-3).
ZetaTriple printed_zeta_triple();
ZetaTriple reconstructed_zeta_triple();
std::string label(const ZetaTriple& t);

}  // namespace g2l
