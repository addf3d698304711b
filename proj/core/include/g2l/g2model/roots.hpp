#pragma once

#include <string>
#include <vector>

#include "g2l/algebra/matrix.hpp"

namespace g2l {

/// A root of G2 as c1*alpha1 + c2*alpha2 (alpha1 short, alpha2 long).
struct Root {
  int c1 = 0;
  int c2 = 0;

  Root operator-() const { return {-c1, -c2}; }
  friend Root operator+(Root a, Root b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
  friend bool operator==(Root a, Root b) = default;
  friend auto operator<=>(Root a, Root b) = default;

  bool is_positive() const { return c1 > 0 || (c1 == 0 && c2 > 0); }
  std::string name() const;
};

inline constexpr Root kAlpha1{1, 0};
inline constexpr Root kAlpha2{0, 1};

/// Simple reflection in alpha2: s2(c1,c2) = (c1, c1 - c2).
Root reflect_alpha2(Root r);
/// Simple reflection in alpha1: s1(c1,c2) = (3 c2 - c1, c2).
Root reflect_alpha1(Root r);

/// The 12 roots of G2 and their root matrices in the 8x8 model, with the
/// parameter-to-root correspondence computed from torus weights.
class RootDatum {
 public:
  static const RootDatum& instance();

  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> positive_roots() const;
  bool is_root(Root r) const;
  /// Parameter name of the display direction spanning the root space.
  const std::string& parameter(Root r) const;
  Root root_of(const std::string& parameter) const;
  /// Nilpotent root matrix E_r (the display direction of its parameter).
  const Matrix<Rational>& root_matrix(Root r) const;
  /// Torus weight of e_1..e_8 in root coordinates.
  const std::vector<Root>& basis_weights() const { return weights_; }
  /// alpha2-coefficient of the weight of e_i: 1,1,0,0,0,0,-1,-1.
  int parabolic_degree(std::size_t i) const { return weights_[i].c2; }

 private:
  RootDatum();

  std::vector<Root> roots_;
  std::vector<std::string> params_;
  std::vector<Matrix<Rational>> mats_;
  std::vector<Root> weights_;
};

/// exp of a nilpotent matrix as a finite sum; throws if x^9 != 0.
template <ExactRing S>
Matrix<S> exp_nilpotent(const Matrix<S>& x) {
  const std::size_t n = x.rows();
  Matrix<S> result = Matrix<S>::identity(n, x.zero_element());
  Matrix<S> power = result;
  Rational factorial(1);
  for (int k = 1; k <= static_cast<int>(n) + 1; ++k) {
    power = power * x;
    if (power.is_zero_matrix()) return result;
    factorial *= Rational(k);
    result += from_rational(factorial.inverse(), x.zero_element()) * power;
  }
  throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

/// x_r(u) = exp(u E_r).
template <ExactRing S>
Matrix<S> one_param(Root r, const S& u) {
  const auto& e = RootDatum::instance().root_matrix(r);
  return exp_nilpotent(Matrix<S>(lift(e, u).map([&u](const S& v) { return v * u; })));
}

/// Scale c with [[E_r, c E_{-r}], E_r] = 2 E_r, so (E_r, c E_{-r}) is an sl2 pair.
Rational coroot_scale(Root r);

/// n_r(t) = x_r(t) x_{-r}(-1/t) x_r(t) in the normalization of coroot_scale.
template <ExactRing S>
Matrix<S> weyl_element(Root r, const S& t) {
  const S c = from_rational(coroot_scale(r), t);
  const S one = one_like(t);
  const S tinv = exact_div(one, t);
  return one_param(r, t) * one_param(-r, -(c * tinv)) * one_param(r, t);
}

/// Weyl representative n_r(1) for a simple root; throws for other roots.
template <ExactRing S>
Matrix<S> weyl_rep(Root r, const S& like = S{}) {
  if (!(r == kAlpha1 || r == kAlpha2)) {
    throw std::invalid_argument("weyl_rep: " + r.name() + " is not a simple root");
  }
  return weyl_element(r, one_like(like));
}

/// h_r(t) = n_r(t) n_r(-1), a torus element.
template <ExactRing S>
Matrix<S> torus_word(Root r, const S& t) {
  return weyl_element(r, t) * weyl_element(r, -one_like(t));
}

/// True when every nonzero entry (i,j) has parabolic_degree(i) >= parabolic_degree(j),
/// i.e. g lies in the parabolic P whose Levi has roots +-alpha1.
template <ExactRing S>
bool in_parabolic(const Matrix<S>& g) {
  const auto& rd = RootDatum::instance();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!is_zero(g(i, j)) && rd.parabolic_degree(i) < rd.parabolic_degree(j)) return false;
  return true;
}

}  // namespace g2l
