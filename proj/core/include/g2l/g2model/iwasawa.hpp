#pragma once

#include "g2l/algebra/matrix.hpp"
#include "g2l/g2model/torus.hpp"
#include "g2l/report.hpp"

namespace g2l {

/// torus(a,b) = u t k with u upper-triangular unipotent, t diagonal and k
/// integral under the case hypothesis. Entries are Laurent in a, b, rho and
/// the formal inverse Ninv of TorusSymbols.
struct IwasawaFactors {
  Matrix<LaurentPoly> u;
  Matrix<LaurentPoly> t;
  Matrix<LaurentPoly> k;
};

/// |b rho| <= |a|: u = x_{a1}(-b/a), t = diag(N/a, a, N/a^2, 1, 1, a^2/N, 1/a, a/N).
/// Throws std::runtime_error if the derived k is not integral.
IwasawaFactors iwasawa_case1();
/// |b rho| > |a|: u = x_{a1}(-a/(b rho)), t = diag(N/(b rho), b rho, N/(b rho)^2, 1, 1,
/// (b rho)^2/N, 1/(b rho), b rho/N). Throws std::runtime_error if no integral k exists.
IwasawaFactors iwasawa_case2();

/// The third factor of the case-1 factorization exactly as printed in the
/// source (entries s = b rho/a with the opposite sign); kept for the ledger check.
Matrix<LaurentPoly> printed_case1_k();

/// Exponents e with value q^e of delta_P(w2 t' w2), |alpha2(t')| and delta_B^{-1/2}(t).
struct ModulusExponents {
  int delta_p = 0;
  int alpha2 = 0;
  int delta_b_inv_half = 0;

  friend bool operator==(const ModulusExponents&, const ModulusExponents&) = default;
};

/// From the valuations m1, m2 >= 0 of the simple roots at t (m1 - m2 divisible by 3):
/// (-max(m1,m2), -min(m1,m2), -m1-m2). Throws std::invalid_argument otherwise.
ModulusExponents modulus_characters(int m1, int m2);

/// The same three quantities from |N|^2/max(|a|,|b|)^3, max(|a|,|b|)^3/|N| and
/// |N|^{-1} with v(t1) = (m1+2m2)/3, v(t2) = (2m1+m2)/3, N = t1 t2.
ModulusExponents modulus_from_norm_formulas(int m1, int m2);

/// Torus element checks, both factorizations, w2 conjugations into P and the
/// modulus characters; the derived case-2 factors are attached as artifacts.
VerificationReport verify_iwasawa();

}  // namespace g2l
