#pragma once

#include <string>
#include <utility>

#include "g2l/algebra/matrix.hpp"

namespace g2l {

namespace detail {
inline void require_square(std::size_t r, std::size_t c, const char* what) {
  if (r != c) {
    throw std::invalid_argument(std::string(what) + ": matrix is " + std::to_string(r) + "x" +
                                std::to_string(c) + ", not square");
  }
}
}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact.
template <ExactRing S>
S det(const Matrix<S>& m) {
  detail::require_square(m.rows(), m.cols(), "det");
  const std::size_t n = m.rows();
  if (n == 0) return S(1);
  Matrix<S> a = m;
  S prev = a.one_element();
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) return a.zero_element();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        S t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = is_zero(t) ? std::move(t) : exact_div(t, prev);
      }
      a(i, k) = a.zero_element();
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

/// Determinant by Laplace expansion along the first row; exponential cost,
/// kept as an independent check for small sizes.
template <ExactRing S>
S det_cofactor(const Matrix<S>& m) {
  detail::require_square(m.rows(), m.cols(), "det_cofactor");
  const std::size_t n = m.rows();
  if (n == 0) return S(1);
  if (n == 1) return m(0, 0);
  S total = m.zero_element();
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<S> minor(n - 1, n - 1, m.zero_element());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    S term = m(0, j) * det_cofactor(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// Rank over the fraction field, by fraction-free row reduction.
template <ExactRing S>
std::size_t rank(const Matrix<S>& m) {
  Matrix<S> a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  S prev = a.one_element();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        S t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        a(i, j) = is_zero(t) ? std::move(t) : exact_div(t, prev);
      }
      a(i, c) = a.zero_element();
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

/// Inverse over a field (Gauss-Jordan). Throws std::domain_error when singular.
template <ExactRing S>
Matrix<S> inverse(const Matrix<S>& m) {
  detail::require_square(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  Matrix<S> a = m;
  Matrix<S> inv = Matrix<S>::identity(n, m.zero_element());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    }
    const S piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) = exact_div(a(k, j), piv);
      inv(k, j) = exact_div(inv(k, j), piv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(a(i, k))) continue;
      const S f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - f * a(k, j);
        inv(i, j) = inv(i, j) - f * inv(k, j);
      }
    }
  }
  return inv;
}

/// Classical adjugate: adj(m) * m = det(m) * I.
template <ExactRing S>
Matrix<S> adjugate(const Matrix<S>& m) {
  detail::require_square(m.rows(), m.cols(), "adjugate");
  const std::size_t n = m.rows();
  Matrix<S> adj(n, n, m.zero_element());
  if (n == 1) {
    adj(0, 0) = m.one_element();
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<S> minor(n - 1, n - 1, m.zero_element());
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      S d = det(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? d : -d;
    }
  }
  return adj;
}

template <ExactRing S>
S trace(const Matrix<S>& m) {
  detail::require_square(m.rows(), m.cols(), "trace");
  S t = m.zero_element();
  for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

/// det(var * I - m) as a polynomial.
LaurentPoly charpoly(const Matrix<LaurentPoly>& m, const std::string& var);
LaurentPoly charpoly(const Matrix<Rational>& m, const std::string& var);

}  // namespace g2l
