#include "g2l/reps/characters.hpp"

#include <array>
#include <optional>
#include <stdexcept>

#include "g2l/algebra/linalg.hpp"

namespace g2l {

namespace {

const std::string kAlpha3Var = "alpha3";

LaurentPoly eigen(int i) {
  static const std::string names[3] = {kAlpha1Var, kAlpha2Var, kAlpha3Var};
  return var(names[i]);
}

/// det(x_i^(e_j)) for i, j = 0..2.
LaurentPoly alternant(const std::array<int, 3>& e) {
  Matrix<LaurentPoly> m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = eigen(i).pow(e[j]);
  return det(m);
}

LaurentPoly eliminate_alpha3(const LaurentPoly& p) {
  return p.substitute(kAlpha3Var, (var(kAlpha1Var) * var(kAlpha2Var)).inverse()).compacted();
}

}  // namespace

LaurentPoly schur_char(int m1, int m2) {
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("schur_char: negative highest weight");
  const std::array<int, 3> lambda{m1 + m2, m2, 0};
  const auto num = alternant({lambda[0] + 2, lambda[1] + 1, lambda[2]});
  const auto den = alternant({2, 1, 0});
  return eliminate_alpha3(exact_div(num, den));
}

LaurentPoly sl2_char(int k, const LaurentPoly& z) {
  if (k < 0) throw std::invalid_argument("sl2_char: negative k");
  LaurentPoly s;
  for (int e = -k; e <= k; e += 2) s += z.pow(e);
  return s;
}

std::vector<LaurentPoly> sym_power_chars(const LaurentPoly& base, int k) {
  if (k < 0) throw std::invalid_argument("sym_power_char: negative k");
  std::vector<LaurentPoly> adams(static_cast<std::size_t>(k) + 1);
  for (int j = 1; j <= k; ++j) adams[j] = base.adams(j);
  std::vector<LaurentPoly> h{LaurentPoly(1)};
  for (int n = 1; n <= k; ++n) {
    LaurentPoly s;
    for (int j = 1; j <= n; ++j) s += adams[j] * h[n - j];
    s *= Rational(1, n);
    h.push_back(std::move(s));
  }
  return h;
}

LaurentPoly sym_power_char(const LaurentPoly& base, int k) { return sym_power_chars(base, k).back(); }

std::map<std::pair<int, int>, Rational> schur_expand(const LaurentPoly& character) {
  std::map<std::pair<int, int>, Rational> out;
  LaurentPoly rest = character;
  while (!rest.is_zero()) {
    // Dominant monomials alpha1^e1 alpha2^e2 have e1 >= e2 >= 0; the
    // functional e1 is positive on every positive root, so its maximum over
    // the dominant support is a highest weight.
    std::optional<std::pair<int, int>> top;
    Rational coeff;
    for (const auto& [exps, c] : rest.terms()) {
      const int e1 = rest.exponent_of(exps, kAlpha1Var);
      const int e2 = rest.exponent_of(exps, kAlpha2Var);
      if (!(e1 >= e2 && e2 >= 0)) continue;
      if (!top || std::make_pair(e1, e2) > *top) {
        top = std::make_pair(e1, e2);
        coeff = c;
      }
    }
    if (!top) throw std::invalid_argument("schur_expand: remainder has no dominant weight");
    if (coeff.sign() < 0 || !coeff.is_integer()) {
      throw std::invalid_argument("schur_expand: multiplicity " + coeff.to_string() + " at weight (" +
                                  std::to_string(top->first - top->second) + "," +
                                  std::to_string(top->second) + ")");
    }
    const std::pair<int, int> m{top->first - top->second, top->second};
    out[m] += coeff;
    rest -= coeff * schur_char(m.first, m.second);
  }
  return out;
}

long weyl_dimension(int m1, int m2) {
  return static_cast<long>(m1 + 1) * (m2 + 1) * (m1 + m2 + 2) / 2;
}

Rational character_degree(const LaurentPoly& character) {
  return character.substitute({{kAlpha1Var, LaurentPoly(1)}, {kAlpha2Var, LaurentPoly(1)}}).to_rational();
}

}  // namespace g2l
