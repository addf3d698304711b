#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2l/algebra/matrix.hpp"

namespace g2l {

inline constexpr std::size_t kDim = 8;

/// The anti-diagonal identity J; <v,w> = v^t J w.
Matrix<Rational> bilinear_form();

/// <v,w> for column vectors of length 8: v_i w_{9-i} summed.
template <ExactRing S>
S pairing(const Matrix<S>& v, const Matrix<S>& w) {
  S s = zero_like(v(0, 0));
  for (std::size_t i = 0; i < kDim; ++i) s = s + v(i, 0) * w(kDim - 1 - i, 0);
  return s;
}

/// True when g J g^t = J.
template <ExactRing S>
bool preserves_bilinear_form(const Matrix<S>& g) {
  const Matrix<S> j = lift(bilinear_form(), g(0, 0));
  return g * j * g.transpose() == j;
}

/// X J + J X^t, which vanishes exactly on so8.
template <ExactRing S>
Matrix<S> so8_defect(const Matrix<S>& x) {
  const Matrix<S> j = lift(bilinear_form(), x(0, 0));
  return x * j + j * x.transpose();
}

/// v0 = e4 - e5.
template <ExactRing S>
Matrix<S> v0(const S& like = S{}) {
  Matrix<S> v(kDim, 1, zero_like(like));
  v(3, 0) = one_like(like);
  v(4, 0) = -one_like(like);
  return v;
}

/// v_rho = e3 + rho e6.
template <ExactRing S>
Matrix<S> v_rho(const S& rho) {
  Matrix<S> v(kDim, 1, zero_like(rho));
  v(2, 0) = one_like(rho);
  v(5, 0) = rho;
  return v;
}

/// Alternating trilinear form on F^8 given as a sum of wedge products of
/// coordinate one-forms; it only sees V0 through e4 + e5.
class TrilinearForm {
 public:
  struct Entry {
    int i, j, k;
    Rational coeff;
  };

  /// The standard form whose stabilizer in SO(V0) is G2.
  static const TrilinearForm& standard();

  const Rational& operator()(int i, int j, int k) const { return t_[index(i, j, k)]; }
  const std::vector<Entry>& nonzero() const { return nz_; }
  bool is_alternating() const;

  template <ExactRing S>
  S evaluate(const Matrix<S>& u, const Matrix<S>& v, const Matrix<S>& w) const {
    S s = zero_like(u(0, 0));
    for (const auto& e : nz_) {
      const S& a = u(e.i, 0);
      if (is_zero(a)) continue;
      const S& b = v(e.j, 0);
      if (is_zero(b)) continue;
      const S& c = w(e.k, 0);
      if (is_zero(c)) continue;
      s = s + from_rational(e.coeff, a) * a * b * c;
    }
    return s;
  }

  /// T(Xe_x,e_y,e_z) + T(e_x,Xe_y,e_z) + T(e_x,e_y,Xe_z) (0-based indices).
  template <ExactRing S>
  S derivation_defect(const Matrix<S>& x, int a, int b, int c) const {
    S s = zero_like(x(0, 0));
    for (int i = 0; i < static_cast<int>(kDim); ++i) {
      const Rational& t1 = (*this)(i, b, c);
      const Rational& t2 = (*this)(a, i, c);
      const Rational& t3 = (*this)(a, b, i);
      if (!t1.is_zero() && !is_zero(x(i, a))) s = s + from_rational(t1, s) * x(i, a);
      if (!t2.is_zero() && !is_zero(x(i, b))) s = s + from_rational(t2, s) * x(i, b);
      if (!t3.is_zero() && !is_zero(x(i, c))) s = s + from_rational(t3, s) * x(i, c);
    }
    return s;
  }

  /// First basis triple (0-based, increasing) where x fails to be a derivation.
  template <ExactRing S>
  std::optional<std::array<int, 3>> first_derivation_failure(const Matrix<S>& x) const {
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c)
          if (!is_zero(derivation_defect(x, a, b, c))) return std::array<int, 3>{a, b, c};
    return std::nullopt;
  }

  /// T(ge_x, ge_y, ge_z) - T(e_x, e_y, e_z).
  template <ExactRing S>
  S invariance_defect(const Matrix<S>& g, int a, int b, int c) const {
    S s = zero_like(g(0, 0));
    for (const auto& e : nz_) {
      const S& ga = g(e.i, a);
      if (is_zero(ga)) continue;
      const S& gb = g(e.j, b);
      if (is_zero(gb)) continue;
      const S& gc = g(e.k, c);
      if (is_zero(gc)) continue;
      s = s + from_rational(e.coeff, s) * ga * gb * gc;
    }
    return s - from_rational((*this)(a, b, c), s);
  }

  template <ExactRing S>
  std::optional<std::array<int, 3>> first_invariance_failure(const Matrix<S>& g) const {
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c)
          if (!is_zero(invariance_defect(g, a, b, c))) return std::array<int, 3>{a, b, c};
    return std::nullopt;
  }

 private:
  TrilinearForm();
  static int index(int i, int j, int k) { return (i * 8 + j) * 8 + k; }

  std::array<Rational, 512> t_;
  std::vector<Entry> nz_;
};

/// "(i,j,k)" with 1-based indices, for reports.
std::string triple_label(const std::array<int, 3>& t);

}  // namespace g2l
