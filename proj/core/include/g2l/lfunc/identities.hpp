#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "g2l/algebra/series.hpp"
#include "g2l/lfunc/lfactor.hpp"
#include "g2l/report.hpp"

namespace g2l {

/// Series variables of the generating-function identities.
inline const std::string kBigX = "X";
inline const std::string kT = "T";
inline const std::string kT1 = "T1";
inline const std::string kT2 = "T2";

// --- SL2 inner integral --------------------------------------------------

/// The integral of f(w2 x_{a2}(u), s) psi(c u) du over F with v(c) = vc,
/// summed shell by shell with a conductor-zero additive character: the
/// integrand is 1 on |u| <= 1 and |u|^(-3s) = (x/q)^k on v(u) = -k, and
/// the integral of psi(c u) over the ball p^n is q^-n when vc + n >= 0, else 0.
/// A polynomial in x and q^-1.
LaurentPoly inner_integral_shell_sum(int vc);
TruncatedSeries inner_integral(int vc, int bound);

/// (1 - q^-1 x)(1 - x^(vc+1)) and (1 - x).
std::pair<LaurentPoly, LaurentPoly> inner_integral_closed_form(int vc);
/// shell_sum * (1 - x) == (1 - q^-1 x)(1 - x^(vc+1)) exactly.
bool inner_integral_agrees(int vc);

/// Exact shell sums against the closed form over vc in [lo, hi].
VerificationReport inner_integral_check(int lo, int hi);

// --- generating-function identities ---------------------------------------

/// (1 - T1^3 T2^3 X^6) / ((1-T1T2X)(1-T1T2X^2)(1-T1^3X^3)(1-T2^3X^3)), numerator and denominator.
std::pair<LaurentPoly, LaurentPoly> split_closed_form();
/// The Poincare series: split_closed_form() divided further by (1-X^2)(1-X^3).
std::pair<LaurentPoly, LaurentPoly> poincare_closed_form();

/// Sum over k <= bound of the highest-weight multiplicities of Sym^k of the
/// adjoint representation, as sum mult(m1,m2) T1^m1 T2^m2 X^k.
TruncatedSeries poincare_series(int bound);

inline constexpr int kPoincareMaxDegree = 10;

/// Compares poincare_series with the closed form. Throws
/// std::invalid_argument when bound exceeds max_degree.
VerificationReport poincare_oracle(int bound, int max_degree = kPoincareMaxDegree);

/// Lattice sum over m1, m2 >= 0 with 3 | m1 - m2 of
/// (1 - X^(min+1))/(1 - X) X^max T1^m1 T2^m2.
TruncatedSeries split_lattice_sum(int bound);
VerificationReport split_identity_check(int bound);

/// The three expressions of the non-split identity in X and T.
TruncatedSeries nonsplit_double_sum(int bound);
TruncatedSeries nonsplit_rational(int bound);
TruncatedSeries nonsplit_single_sum(int bound);
VerificationReport nonsplit_identity_check(int bound);

// --- the unramified computation -------------------------------------------

/// (1 - q^-1 x) sum (1 - x^(min+1))/(1 - x) x^max Tr Gamma_{m1,m2}(class) for a
/// split class, and (1 - q^-1 x) sum_m (1 - x^(m+1))/(1 - x) x^m sl2_char(m, mu^2)
/// for a non-split one.
TruncatedSeries unramified_lhs(const SatakeClass& c, int bound);

/// L(3s-1, class, r) divided by the product of the zeta factors.
TruncatedSeries unramified_rhs(const SatakeClass& c, const ZetaTriple& zetas, int bound);

enum class PlaceCase { split, nonsplit };
std::string to_string(PlaceCase c);

/// Compares unramified_lhs and unramified_rhs with fully symbolic class
/// parameters for both candidate zeta triples; exactly one must match.
VerificationReport proposition_check(PlaceCase which, int bound);

/// Determinant form of the L-factor, Fr-eigenspaces and the Frobenius
/// conjugation identity for r.
VerificationReport verify_lfactor(PlaceCase which);

/// Renders the first difference of two series for reports.
std::string describe_difference(const TruncatedSeries::Difference& d,
                                const std::vector<std::string>& series_vars);

}  // namespace g2l
