#include <doctest.h>

#include "g2l/algebra/laurent.hpp"
#include "g2l/algebra/linalg.hpp"
#include "g2l/algebra/series.hpp"
#include "support/random_algebra.hpp"

using namespace g2l;

namespace {
LaurentPoly X() { return var("X"); }
LaurentPoly poly_from_coeffs(const std::string& v, const std::vector<int>& c) {
  LaurentPoly p;
  for (std::size_t k = 0; k < c.size(); ++k) p += LaurentPoly::monomial({v}, {static_cast<int>(k)}, c[k]);
  return p;
}
}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a * Rational(2, 3) == Rational(-1));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("laurent basics and printing") {
  const LaurentPoly a = var("a"), b = var("b");
  const LaurentPoly p = a * a - Rational(3, 2) * b.pow(-1) + 1;
  CHECK(p.to_string() == "a^2 + 1 - 3/2*b^-1");
  CHECK(p.max_exponent("b") == 0);
  CHECK(p.min_exponent("b") == -1);
  CHECK((p - p).is_zero());
  CHECK((a * a.inverse()) == LaurentPoly(1));
  CHECK_THROWS_AS((a + b).inverse(), std::domain_error);
  CHECK(p.substitute("a", b) == b * b - Rational(3, 2) * b.pow(-1) + 1);
  CHECK((a + b).pow(2) == a * a + 2 * a * b + b * b);
  CHECK((a * b.pow(-2)).adams(3) == a.pow(3) * b.pow(-6));
}

TEST_CASE("exact division of Laurent polynomials") {
  const LaurentPoly a = var("a"), b = var("b"), r = var("rho");
  const LaurentPoly n = a * a - b * b * r;
  const LaurentPoly f = n * (a.pow(-1) + 3 * b * r) * (a - b);
  auto q = f.exact_divide(n);
  REQUIRE(q.has_value());
  CHECK(*q == (a.pow(-1) + 3 * b * r) * (a - b));
  CHECK_FALSE((n + 1).exact_divide(a - b).has_value());
  CHECK_THROWS_AS(exact_div(n + 1, a - b), std::domain_error);
}

TEST_CASE("series_expand examples") {
  SUBCASE("geometric series") {
    auto s = series_expand(1, 1 - X(), {"X"}, 3);
    CHECK(s.poly() == poly_from_coeffs("X", {1, 1, 1, 1}));
  }
  SUBCASE("(1-X)(1-X^2)") {
    auto s = series_expand(1, (1 - X()) * (1 - X() * X()), {"X"}, 2);
    CHECK(s.poly() == poly_from_coeffs("X", {1, 1, 2}));
  }
  SUBCASE("six-factor closed form, weight variables carried exactly") {
    const LaurentPoly t1 = var("T1"), t2 = var("T2"), x = X();
    const LaurentPoly num = 1 - t1.pow(3) * t2.pow(3) * x.pow(6);
    const LaurentPoly den = (1 - t1 * t2 * x) * (1 - t1 * t2 * x * x) * (1 - t1.pow(3) * x.pow(3)) *
                            (1 - t2.pow(3) * x.pow(3)) * (1 - x * x) * (1 - x.pow(3));
    auto s = series_expand(num, den, {"X"}, 2);
    CHECK(s.poly() == 1 + t1 * t2 * x + (t1 * t1 * t2 * t2 + t1 * t2 + 1) * x * x);
  }
  SUBCASE("non-invertible constant term names the denominator") {
    const LaurentPoly a = var("a");
    try {
      (void)series_expand(1, X() + (a + 1) * X() * X(), {"X"}, 4);
      FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
      CHECK(std::string(e.what()).find("denominator") != std::string::npos);
    }
    CHECK_THROWS_AS(series_expand(1, a + 1 - X(), {"X"}, 4), std::domain_error);
  }
  SUBCASE("Laurent unit constant term") {
    const LaurentPoly q = var("q");
    auto s = series_expand(1, q - X(), {"X"}, 3);
    CHECK(s.poly() == q.pow(-1) + q.pow(-2) * X() + q.pow(-3) * X().pow(2) + q.pow(-4) * X().pow(3));
  }
}

TEST_CASE("series_expand times denominator reproduces the numerator") {
  testing::Gen gen(7);
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentPoly num = gen.laurent({"a", "X", "Y"}, 4, 0, 2);
    LaurentPoly den = 1 + gen.laurent({"a", "X"}, 3, 0, 2) * X() + gen.laurent({"Y"}, 2, 1, 2);
    const int d = 6;
    auto s = series_expand(num, den, {"X", "Y"}, d);
    TruncatedSeries back = s * TruncatedSeries(den, {"X", "Y"}, d);
    CHECK(back == TruncatedSeries(num, {"X", "Y"}, d));
  }
}

TEST_CASE("truncated series arithmetic") {
  TruncatedSeries a(1 + X(), {"X"}, 3);
  TruncatedSeries b(1 - X() + X() * X(), {"X"}, 3);
  CHECK((a * b).poly() == 1 + X().pow(3));
  CHECK((a * a.inverse()).poly() == LaurentPoly(1));
  auto diff = a.first_difference(b);
  REQUIRE(diff.has_value());
  CHECK(diff->exponents == std::vector<int>{1});
  CHECK(diff->lhs == LaurentPoly(1));
  CHECK(diff->rhs == LaurentPoly(-1));
  CHECK_THROWS_AS(TruncatedSeries(X().pow(-1), {"X"}, 2), std::invalid_argument);
}

TEST_CASE("ring axioms on random Laurent samples") {
  testing::Gen gen(2024);
  const std::vector<std::string> vars{"a", "b", "c"};
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly p = gen.laurent(vars), q = gen.laurent(vars), r = gen.laurent({"b", "d"});
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + q == q + p);
  }
}

TEST_CASE("det examples") {
  CHECK(det(Matrix<Rational>::identity(8)) == Rational(1));
  const LaurentPoly a1 = var("alpha1"), a2 = var("alpha2"), a3 = var("alpha3");
  CHECK(det(Matrix<LaurentPoly>::diagonal({a1, a2, a3})) == a1 * a2 * a3);
  const LaurentPoly a = var("a"), b = var("b"), rho = var("rho");
  auto norm = Matrix<LaurentPoly>::from_rows({{a, b}, {b * rho, a}});
  CHECK(det(norm) == a * a - b * b * rho);
  CHECK_THROWS_AS(det(Matrix<Rational>(2, 3)), std::invalid_argument);
  Matrix<Rational> singular = Matrix<Rational>::from_rows({{1, 2}, {2, 4}});
  CHECK(det(singular).is_zero());
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = gen.laurent_matrix(4, {"u", "v"});
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("det is multiplicative on random Laurent matrices") {
  testing::Gen gen(5);
  for (std::size_t n : {3U, 4U}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto m1 = gen.laurent_matrix(n, {"u", "v"});
      auto m2 = gen.laurent_matrix(n, {"u", "w"});
      CHECK(det(m1 * m2) == det(m1) * det(m2));
    }
  }
}

TEST_CASE("matrix product is associative on random triples") {
  testing::Gen gen(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = gen.laurent_matrix(3, {"u"}), b = gen.laurent_matrix(3, {"v"}), c = gen.laurent_matrix(3, {"u", "v"});
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("charpoly examples and properties") {
  const LaurentPoly t = var("t");
  CHECK(charpoly(Matrix<Rational>::identity(2), "t") == (t - 1) * (t - 1));
  const LaurentPoly mu = var("mu");
  CHECK(charpoly(Matrix<LaurentPoly>::diagonal({mu, mu.inverse()}), "t") ==
        t * t - (mu + mu.inverse()) * t + 1);
  CHECK_THROWS_AS(charpoly(Matrix<LaurentPoly>(2, 3), "t"), std::invalid_argument);

  testing::Gen gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto b1 = gen.laurent_matrix(2, {"u"});
    auto b2 = gen.laurent_matrix(2, {"v"});
    Matrix<LaurentPoly> blk(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        blk(i, j) = b1(i, j);
        blk(i + 2, j + 2) = b2(i, j);
      }
    const LaurentPoly cp = charpoly(blk, "t");
    CHECK(cp == charpoly(b1, "t") * charpoly(b2, "t"));
    CHECK(cp.max_exponent("t") == 4);
    CHECK(cp.coefficient({"t"}, {0}) == det(blk));
  }
}

TEST_CASE("rank, inverse, adjugate") {
  auto m = Matrix<Rational>::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  CHECK_THROWS_AS(inverse(m), std::domain_error);
  testing::Gen gen(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto r = gen.rational_matrix(4);
    if (det(r).is_zero()) continue;
    CHECK(r * inverse(r) == Matrix<Rational>::identity(4));
    CHECK(adjugate(r) * r == det(r) * Matrix<Rational>::identity(4));
  }
  const LaurentPoly rho = var("rho");
  auto sym = Matrix<LaurentPoly>::from_rows({{1, rho}, {rho, rho * rho}});
  CHECK(rank(sym) == 1);
}
