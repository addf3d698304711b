#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "g2l/algebra/linalg.hpp"
#include "g2l/reps/characters.hpp"

namespace g2l {

/// Split Satake class diag(alpha1, alpha2, alpha3), alpha3 = (alpha1 alpha2)^-1.
struct SplitClass {
  LaurentPoly alpha1 = var(kAlpha1Var);
  LaurentPoly alpha2 = var(kAlpha2Var);

  LaurentPoly alpha3() const { return (alpha1 * alpha2).inverse(); }
  /// The class with alpha1 = alpha2 = 1.
  static SplitClass trivial() { return {LaurentPoly(1), LaurentPoly(1)}; }
};

/// Non-split Satake class diag(mu, 1, mu^-1) x Fr (central sign adjusted to +1).
struct NonSplitClass {
  LaurentPoly mu = var("mu");

  static NonSplitClass trivial() { return {LaurentPoly(1)}; }
};

using SatakeClass = std::variant<SplitClass, NonSplitClass>;

/// Traceless 3x3 matrices in the basis E12, E13, E21, E23, E31, E32,
/// H1 = E11 - E22, H2 = E22 - E33.
struct AdjointBasis {
  static const std::array<std::string, 8>& names();
  /// The basis matrix with the given index.
  static Matrix<Rational> element(std::size_t k);

  template <ExactRing S>
  static std::array<S, 8> coordinates(const Matrix<S>& x) {
    if (!is_zero(x(0, 0) + x(1, 1) + x(2, 2))) {
      throw std::invalid_argument("AdjointBasis: matrix is not traceless");
    }
    return {x(0, 1), x(0, 2), x(1, 0), x(1, 2), x(2, 0), x(2, 1), x(0, 0), -x(2, 2)};
  }
};

/// 8x8 matrix of X -> left X right on AdjointBasis; `right` must make the
/// image traceless (right = left^-1 or adj(left)).
template <ExactRing S>
Matrix<S> adjoint_action(const Matrix<S>& left, const Matrix<S>& right) {
  const S like = left.zero_element();
  Matrix<S> out(8, 8, like);
  for (std::size_t k = 0; k < 8; ++k) {
    const auto img = AdjointBasis::coordinates(Matrix<S>(left * lift(AdjointBasis::element(k), like) * right));
    for (std::size_t r = 0; r < 8; ++r) out(r, k) = img[r];
  }
  return out;
}

/// r(g): X -> g X g^-1. Throws std::domain_error for singular g.
template <ExactRing S>
Matrix<S> r_matrix(const Matrix<S>& g) {
  detail::require_square(g.rows(), g.cols(), "r_matrix");
  if (g.rows() != 3) throw std::invalid_argument("r_matrix: expected a 3x3 matrix");
  if (is_zero(det(g))) throw std::domain_error("r_matrix: g is not invertible");
  return adjoint_action(g, inverse(g));
}

/// X -> g X adj(g) = det(g) r(g); polynomial in the entries of g.
template <ExactRing S>
Matrix<S> r_unnormalized(const Matrix<S>& g) {
  return adjoint_action(g, adjugate(g));
}

/// The "other transpose" J A^t J (reflection across the anti-diagonal).
template <ExactRing S>
Matrix<S> other_transpose(const Matrix<S>& a) {
  const std::size_t n = a.rows();
  Matrix<S> out(a.cols(), n, a.zero_element());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(a.cols() - 1 - j, n - 1 - i) = a(i, j);
  return out;
}

/// r(Fr): X -> J X^t J on AdjointBasis.
Matrix<Rational> r_fr();
/// r'(Fr): X -> -J X^t J, the twist by the nontrivial character of Gal(E/F).
Matrix<Rational> r_fr_twisted();

/// The 3x3 representative of a class: diag(alpha1, alpha2, alpha3) or diag(mu, 1, mu^-1).
Matrix<LaurentPoly> class_representative(const SatakeClass& c);
/// r of the class: r(g) when split, r(g) r(Fr) when non-split (`twisted` uses r').
Matrix<LaurentPoly> r_of_class(const SatakeClass& c, bool twisted = false);

/// Torus eigenvalues of diag(mu, 1, mu^-1) on the +1 and -1 eigenspaces of r(Fr),
/// each list sorted by decreasing exponent of mu.
struct EigenSplit {
  std::vector<LaurentPoly> plus;
  std::vector<LaurentPoly> minus;
};
EigenSplit fr_eigensplit(const LaurentPoly& mu);

}  // namespace g2l
