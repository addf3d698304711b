#pragma once

#include <map>
#include <vector>
#include <string>
#include <utility>

#include "g2l/algebra/laurent.hpp"

namespace g2l {

/// Eigenvalue variables of the split Satake class; alpha3 = (alpha1 alpha2)^-1.
inline const std::string kAlpha1Var = "alpha1";
inline const std::string kAlpha2Var = "alpha2";

/// Character of the GL3 irreducible with highest weight m1 w1 + m2 w2 at
/// diag(alpha1, alpha2, (alpha1 alpha2)^-1): the Schur polynomial of
/// (m1+m2, m2, 0) as a ratio of alternants. Throws on negative input.
LaurentPoly schur_char(int m1, int m2);

/// z^k + z^(k-2) + ... + z^-k. `z` must be a monomial. Throws for k < 0.
LaurentPoly sl2_char(int k, const LaurentPoly& z);

/// Character of Sym^k of the representation with character `base`, via
/// k h_k = sum_j p_j h_(k-j) with p_j the Adams operation. Throws for k < 0.
LaurentPoly sym_power_char(const LaurentPoly& base, int k);

/// All of h_0 .. h_k at once.
std::vector<LaurentPoly> sym_power_chars(const LaurentPoly& base, int k);

/// Multiplicities of schur_char(m1, m2) in a PGL3 character in alpha1, alpha2,
/// by repeatedly removing the highest dominant weight. Throws
/// std::invalid_argument when the input is not a genuine character.
std::map<std::pair<int, int>, Rational> schur_expand(const LaurentPoly& character);

/// Weyl dimension (m1+1)(m2+1)(m1+m2+2)/2.
long weyl_dimension(int m1, int m2);

/// Value at alpha1 = alpha2 = 1.
Rational character_degree(const LaurentPoly& character);

}  // namespace g2l
