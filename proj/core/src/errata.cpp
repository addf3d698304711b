#include "g2l/errata.hpp"

namespace g2l::errata {

TypoEntry bilinear_form_shape() {
  return {"bilinear form J", "J rendered as the 3x3 identity matrix",
          "J is the anti-diagonal identity (ones on the anti-diagonal); only then "
          "<v_rho,v_rho> = 2 rho and the so8 condition X J + J X^t = 0 hold for both Lie algebra displays"};
}

TypoEntry norm_formula() {
  return {"torus element, definition of N", "N := a^2 - b rho^2",
          "N = a^2 - b^2 rho; with this N the 8x8 torus matrix has determinant 1, fixes v_rho and "
          "preserves J and T, while the printed N gives a determinant different from 1"};
}

TypoEntry traceless_matrix_size() {
  return {"representation r, underlying space", "3x4 traceless matrices",
          "3x3 traceless matrices (dimension 8, basis E12,E13,E21,E23,E31,E32,E11-E22,E22-E33)"};
}

TypoEntry case1_compact_factor() {
  return {"Iwasawa factorization for |b rho| <= |a|, third factor k'",
          "k' with entries b rho/a, -(b rho/a)^2 below the diagonal",
          "k' = t'^{-1} u'^{-1} t(a,b) is the printed matrix with b rho/a replaced by -b rho/a "
          "(entries of odd degree change sign); u' = x_{a1}(-b/a) and t' are correct as printed"};
}

TypoEntry case2_blank_factors() {
  return {"Iwasawa factorization for |b rho| > |a|, first and third factors",
          "u' and k' left blank",
          "u' = x_{a1}(-a/(b rho)) and k' = t'^{-1} u'^{-1} t(a,b), an integral matrix with entries "
          "in Z[a/(b rho)]; the printed middle factor t' is confirmed (matrices in artifacts)"};
}

TypoEntry frobenius_minus_eigenspace() {
  return {"non-split case, Fr eigenspaces of the adjoint representation",
          "second eigenspace again described as a 5 dimensional +1 eigenspace",
          "the second eigenspace is the 3-dimensional -1 eigenspace, on which diag(mu,1,mu^-1) has "
          "eigenvalues mu, 1, mu^-1"};
}

TypoEntry dual_group_conjugacy_class() {
  return {"split case, Satake parameter", "conjugacy class of GL_2(C)",
          "conjugacy class of GL_3(C) (the representation r is the adjoint of GL_3)"};
}

TypoEntry nonsplit_exponent_case() {
  return {"non-split case, final triple identity", "T^M in the last sum",
          "T^m; the three expressions agree coefficient-wise with lowercase m"};
}

TypoEntry modulus_exponent_sign() {
  return {"split case, modulus characters",
          "delta_B^{-1/2}(t) = |N|^{-1} together with delta_B^{-1/2}(t) = q^{-m1-m2}",
          "with v(N) = m1 + m2 these disagree: q^{-m1-m2} = |N|. The final lattice sum uses "
          "q^{-m1-m2}; delta_P = q^{-max(m1,m2)} and |alpha2(t')| = q^{-min(m1,m2)} are consistent"};
}

TypoEntry inner_integral_domain() {
  return {"SL2 inner integral, closed form",
          "(1-q^{-3s})(1-q^{(-3s+1)(v(c)+1)})/(1-q^{-3s+1}) for all c",
          "the shell sum vanishes for every v(c) <= -1; the rational closed form agrees for v(c) >= -1 "
          "but is nonzero for v(c) <= -2 (e.g. -(1-q^{-1}x)/x at v(c) = -2)"};
}

TypoEntry zeta_triple(const std::string& winner) {
  return {"unramified proposition, normalizing zeta factors", "zeta(3s) zeta(6s-2) zeta(3s-9)",
          "the local identity holds to the checked degree with " + winner};
}

}  // namespace g2l::errata
