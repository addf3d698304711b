#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2l/algebra/matrix.hpp"
#include "g2l/report.hpp"

namespace g2l {

/// Parameter names of the G2 display, in order.
const std::array<std::string, 14>& g2_parameter_names();
/// Parameter names of the SU(2,1) display, in order (rho is separate).
const std::array<std::string, 8>& su21_parameter_names();

/// The general element of the G2 Lie algebra in the 8x8 model; p follows
/// g2_parameter_names().
template <ExactRing S>
Matrix<S> g2_element(const std::array<S, 14>& p) {
  const auto& [T1, T2, a, b, c, d, e, f, g, h, i, j, k, l] = p;
  const S z = zero_like(T1);
  const S two = from_rational(Rational(2), T1);
  return Matrix<S>::from_rows({
      {T1, a, c, d, d, e, f, z},
      {g, T2 - T1, b, -c, -c, d, z, -f},
      {h, l, two * T1 - T2, a, a, z, -d, -e},
      {i, -h, g, z, z, -a, c, -d},
      {i, -h, g, z, z, -a, c, -d},
      {j, i, z, -g, -g, T2 - two * T1, -b, -c},
      {k, z, -i, h, h, -l, T1 - T2, -a},
      {z, -k, -j, -i, -i, -h, -g, -T1},
  });
}

/// The SU(2,1) display: the G2 element with c = -rho e, b = -rho d,
/// T2 = 2 T1, g = rho a, i = -rho l, j = -rho h. p follows su21_parameter_names().
template <ExactRing S>
std::array<S, 14> su21_to_g2(const std::array<S, 8>& p, const S& rho) {
  const auto& [T1, a, d, e, f, h, k, l] = p;
  const S two = from_rational(Rational(2), T1);
  return {T1, two * T1, a, -rho * d, -rho * e, d, e, f, rho * a, h, -rho * l, -rho * h, k, l};
}

/// The SU(2,1) display itself, entry by entry.
template <ExactRing S>
Matrix<S> su21_element(const std::array<S, 8>& p, const S& rho) {
  const auto& [T1, a, d, e, f, h, k, l] = p;
  const S z = zero_like(T1);
  const S r = rho;
  return Matrix<S>::from_rows({
      {T1, a, -r * e, d, d, e, f, z},
      {r * a, T1, -r * d, r * e, r * e, d, z, -f},
      {h, l, z, a, a, z, -d, -e},
      {-r * l, -h, r * a, z, z, -a, -r * e, -d},
      {-r * l, -h, r * a, z, z, -a, -r * e, -d},
      {-r * h, -r * l, z, -r * a, -r * a, z, r * d, r * e},
      {k, z, r * l, h, h, -l, -T1, -a},
      {z, -k, r * h, r * l, r * l, -h, -r * a, -T1},
  });
}

/// The element of the G2 display with every parameter a fresh symbol.
Matrix<LaurentPoly> g2_generic();
/// The SU(2,1) display with symbolic parameters and symbolic rho.
Matrix<LaurentPoly> su21_generic();

/// Matrix of the single-parameter direction (that parameter 1, others 0).
Matrix<Rational> g2_direction(const std::string& parameter);
Matrix<LaurentPoly> su21_direction(const std::string& parameter);

template <ExactRing S>
Matrix<S> bracket(const Matrix<S>& x, const Matrix<S>& y) {
  return x * y - y * x;
}

/// Flattens matrices as columns of a 64 x n matrix, for span computations.
template <ExactRing S>
Matrix<S> flatten_columns(const std::vector<Matrix<S>>& ms) {
  const std::size_t n = ms.front().rows() * ms.front().cols();
  Matrix<S> out(n, ms.size(), ms.front().zero_element());
  for (std::size_t c = 0; c < ms.size(); ++c)
    for (std::size_t k = 0; k < n; ++k) out(k, c) = ms[c].data()[k];
  return out;
}

/// Checks both Lie algebra displays: so8 and derivation conditions, bracket
/// closure and dimension, and that the SU(2,1) display is the full
/// stabilizer of v_rho inside the G2 display.
VerificationReport verify_lie_models();

}  // namespace g2l
