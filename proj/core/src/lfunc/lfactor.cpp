#include "g2l/lfunc/lfactor.hpp"

#include <stdexcept>

namespace g2l {

LaurentPoly l_factor_denominator(const SatakeClass& c, bool twisted) {
  const auto r = r_of_class(c, twisted);
  const LaurentPoly x = var(kX);
  return det(Matrix<LaurentPoly>::identity(8) - x * r);
}

TruncatedSeries local_l_factor(const SatakeClass& c, int bound, bool twisted) {
  return series_expand(LaurentPoly(1), l_factor_denominator(c, twisted), {kX}, bound);
}

LaurentPoly nonsplit_product_denominator(const LaurentPoly& mu) {
  const LaurentPoly x = var(kX);
  const LaurentPoly m2 = mu * mu;
  const LaurentPoly mi2 = m2.inverse();
  return (1 - m2 * x) * (1 - m2 * x * x) * (1 - x * x) * (1 - mi2 * x) * (1 - mi2 * x * x);
}

LaurentPoly zeta_denominator(int c1, int c0) {
  if (c1 <= 0 || c1 % 3 != 0) {
    throw std::invalid_argument("zeta_denominator: " + ZetaArgument{c1, c0}.label() +
                                " is not expressible in x = q^(-3s+1)");
  }
  const int e = -c0 - c1 / 3;
  return 1 - LaurentPoly::monomial({kQ, kX}, {e, c1 / 3});
}

std::string ZetaArgument::label() const {
  std::string s = "zeta(" + std::to_string(c1) + "s";
  if (c0 > 0) s += "+" + std::to_string(c0);
  if (c0 < 0) s += std::to_string(c0);
  return s + ")";
}

ZetaTriple printed_zeta_triple() { return {{3, 0}, {6, -2}, {3, -9}}; }
ZetaTriple reconstructed_zeta_triple() { return {{3, 0}, {6, -2}, {9, -3}}; }

std::string label(const ZetaTriple& t) {
  std::string s;
  for (const auto& z : t) s += (s.empty() ? "" : " ") + z.label();
  return s;
}

}  // namespace g2l
