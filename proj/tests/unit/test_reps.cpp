#include <doctest.h>

#include "g2l/algebra/linalg.hpp"
#include "g2l/reps/adjoint.hpp"
#include "g2l/reps/characters.hpp"

using namespace g2l;

namespace {

const LaurentPoly a1 = var(kAlpha1Var);
const LaurentPoly a2 = var(kAlpha2Var);

LaurentPoly mono(int e1, int e2) {
  return LaurentPoly::monomial({kAlpha1Var, kAlpha2Var}, {e1, e2});
}

// Schur polynomial of (l1, l2, 0) in three variables via Gelfand-Tsetlin patterns,
// then alpha3 = (alpha1 alpha2)^-1.
LaurentPoly gelfand_tsetlin(int m1, int m2) {
  const int l1 = m1 + m2, l2 = m2, l3 = 0;
  LaurentPoly out;
  for (int u1 = l2; u1 <= l1; ++u1)
    for (int u2 = l3; u2 <= l2; ++u2)
      for (int w = u2; w <= u1; ++w) {
        const int x1 = w, x2 = u1 + u2 - w, x3 = l1 + l2 + l3 - u1 - u2;
        out += mono(x1 - x3, x2 - x3);
      }
  return out;
}

LaurentPoly swap12(const LaurentPoly& p) { return p.substitute({{kAlpha1Var, a2}, {kAlpha2Var, a1}}); }

}  // namespace

TEST_CASE("schur characters agree with Gelfand-Tsetlin enumeration") {
  for (int m1 = 0; m1 <= 5; ++m1)
    for (int m2 = 0; m2 <= 5; ++m2) {
      INFO("(m1, m2) = (" << m1 << ", " << m2 << ")");
      const auto chi = schur_char(m1, m2);
      CHECK(chi == gelfand_tsetlin(m1, m2));
      CHECK(character_degree(chi) == Rational(weyl_dimension(m1, m2)));
    }
  CHECK(schur_char(0, 0) == LaurentPoly(1));
  CHECK_THROWS_AS(schur_char(-1, 0), std::invalid_argument);
}

TEST_CASE("schur characters are Weyl invariant") {
  const auto a3 = (a1 * a2).inverse();
  for (int m1 = 0; m1 <= 4; ++m1)
    for (int m2 = 0; m2 <= 4 - m1; ++m2) {
      const auto chi = schur_char(m1, m2);
      CHECK(swap12(chi) == chi);
      CHECK(chi.substitute({{kAlpha1Var, a2}, {kAlpha2Var, a3}}) == chi);
    }
  // Duality swaps the two fundamental weights.
  CHECK(schur_char(2, 1).substitute({{kAlpha1Var, a1.inverse()}, {kAlpha2Var, a2.inverse()}}) == schur_char(1, 2));
}

TEST_CASE("sl2 characters") {
  const LaurentPoly z = var("z");
  CHECK(sl2_char(0, z) == LaurentPoly(1));
  CHECK(sl2_char(2, z) == z * z + LaurentPoly(1) + (z * z).inverse());
  // Clebsch-Gordan: V2 x V3 = V5 + V3 + V1.
  CHECK(sl2_char(2, z) * sl2_char(3, z) == sl2_char(5, z) + sl2_char(3, z) + sl2_char(1, z));
  CHECK_THROWS(sl2_char(-1, z));
  CHECK_THROWS(sl2_char(1, z + LaurentPoly(1)));
}

TEST_CASE("symmetric powers of the adjoint character") {
  const auto adj = schur_char(1, 1);
  const auto h = sym_power_chars(adj, 4);
  REQUIRE(h.size() == 5);
  CHECK(h[0] == LaurentPoly(1));
  CHECK(h[1] == adj);
  CHECK(character_degree(h[2]) == Rational(36));
  CHECK(character_degree(h[3]) == Rational(120));
  // Sym^2 of sl3 = trivial + adjoint + 27-dimensional.
  const auto e2 = schur_expand(h[2]);
  const std::map<std::pair<int, int>, Rational> want{{{0, 0}, Rational(1)}, {{1, 1}, Rational(1)}, {{2, 2}, Rational(1)}};
  CHECK(e2 == want);
  CHECK(sym_power_char(adj, 3) == h[3]);
  CHECK_THROWS(sym_power_char(adj, -1));
}

TEST_CASE("schur expansion round trip and rejection") {
  const auto chi = schur_char(2, 0) * schur_char(0, 1);  // Sym^2 V x V* = V(2,1) + V(1,0)
  const auto e = schur_expand(chi);
  const std::map<std::pair<int, int>, Rational> want{{{2, 1}, Rational(1)}, {{1, 0}, Rational(1)}};
  CHECK(e == want);
  LaurentPoly back;
  for (const auto& [m, c] : e) back += schur_char(m.first, m.second) * LaurentPoly(c);
  CHECK(back == chi);
  CHECK_THROWS_AS(schur_expand(a1), std::invalid_argument);
  CHECK_THROWS_AS(schur_expand(schur_char(1, 1) - schur_char(2, 2)), std::invalid_argument);
}

TEST_CASE("adjoint representation matrices") {
  const auto g = Matrix<Rational>::from_rows({{Rational(2), Rational(1), Rational(0)},
                                              {Rational(0), Rational(1), Rational(3)},
                                              {Rational(1), Rational(0), Rational(1)}});
  const auto h = Matrix<Rational>::from_rows({{Rational(1), Rational(0), Rational(1)},
                                              {Rational(2), Rational(1), Rational(0)},
                                              {Rational(0), Rational(-1), Rational(1)}});
  CHECK(r_matrix(Matrix<Rational>(g * h)) == r_matrix(g) * r_matrix(h));
  CHECK(r_matrix(Matrix<Rational>::identity(3, Rational(0))) == Matrix<Rational>::identity(8, Rational(0)));
  CHECK(r_unnormalized(g) == det(g) * r_matrix(g));
  CHECK(r_fr() * r_fr() == Matrix<Rational>::identity(8, Rational(0)));
  CHECK(r_fr_twisted() == Rational(-1) * r_fr());
  CHECK(other_transpose(other_transpose(g)) == g);
  const Matrix<Rational> singular(3, 3, Rational(0));
  CHECK_THROWS_AS(r_matrix(singular), std::domain_error);
  // The split class acts diagonally with the roots of sl3 as eigenvalues.
  const auto r = r_of_class(SplitClass{});
  CHECK(r(0, 0) == a1 * a2.inverse());
  CHECK(r(6, 6) == LaurentPoly(1));
}

TEST_CASE("Frobenius eigenspaces on the adjoint representation") {
  const LaurentPoly mu = var("mu");
  const auto split = fr_eigensplit(mu);
  CHECK(split.plus.size() == 5);
  CHECK(split.minus.size() == 3);
  const std::vector<LaurentPoly> plus{mu * mu, mu, LaurentPoly(1), mu.inverse(), (mu * mu).inverse()};
  const std::vector<LaurentPoly> minus{mu, LaurentPoly(1), mu.inverse()};
  CHECK(split.plus == plus);
  CHECK(split.minus == minus);
}
