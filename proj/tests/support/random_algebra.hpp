#pragma once

// Seeded generators for property-style tests.

#include <random>
#include <string>
#include <vector>

#include "g2l/algebra/laurent.hpp"
#include "g2l/algebra/matrix.hpp"

namespace g2l::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 5) {
    const int num = integer(-span, span);
    const int den = integer(1, 3);
    return Rational(num, den);
  }

  /// Laurent polynomial with up to `terms` terms, exponents in [-2, 2].
  LaurentPoly laurent(const std::vector<std::string>& vars, int terms = 4, int lo = -2, int hi = 2) {
    LaurentPoly p;
    const int n = integer(1, terms);
    for (int t = 0; t < n; ++t) {
      std::vector<int> e;
      for (std::size_t i = 0; i < vars.size(); ++i) e.push_back(integer(lo, hi));
      p += LaurentPoly::monomial(vars, e, rational());
    }
    return p;
  }

  Matrix<LaurentPoly> laurent_matrix(std::size_t n, const std::vector<std::string>& vars) {
    Matrix<LaurentPoly> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = integer(0, 3) == 0 ? LaurentPoly() : laurent(vars, 2, 0, 1);
    return m;
  }

  Matrix<Rational> rational_matrix(std::size_t n) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rational();
    return m;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace g2l::testing
