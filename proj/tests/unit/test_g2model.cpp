#include <doctest.h>

#include "g2l/algebra/linalg.hpp"
#include "g2l/g2model/forms.hpp"
#include "g2l/g2model/iwasawa.hpp"
#include "g2l/g2model/lie.hpp"
#include "g2l/g2model/roots.hpp"
#include "g2l/g2model/torus.hpp"

using namespace g2l;

namespace {
void require_passed(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) {
    INFO(c.name << ": " << c.detail << " " << c.counterexample.value_or(""));
    CHECK(c.status != Status::fail);
  }
}
}  // namespace

TEST_CASE("bilinear form and distinguished vectors") {
  const auto j = bilinear_form();
  CHECK(j == j.transpose());
  CHECK(j(0, 7) == Rational(1));
  CHECK(j(0, 0) == Rational(0));
  const LaurentPoly rho = var("rho");
  CHECK(pairing(v0(rho), v0(rho)) == LaurentPoly(-2));
  CHECK(pairing(v_rho(rho), v_rho(rho)) == 2 * rho);
}

TEST_CASE("trilinear form") {
  const auto& t = TrilinearForm::standard();
  CHECK(t.is_alternating());
  CHECK(t(6, 3, 1) == Rational(1));  // e7* ^ e4* ^ e2*
  CHECK(t(2, 1, 7) == Rational(2));
  CHECK(t(5, 6, 0) == Rational(-2));
  // T only sees e4 + e5, so v0 pairs to zero with everything.
  const auto w0 = v0(Rational(0));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      Matrix<Rational> ea(8, 1, Rational(0)), eb(8, 1, Rational(0));
      ea(a, 0) = 1;
      eb(b, 0) = 1;
      CHECK(t.evaluate(w0, ea, eb).is_zero());
    }
}

TEST_CASE("zero parameters satisfy every condition") {
  std::array<Rational, 14> p{};
  const auto x = g2_element(p);
  CHECK(x.is_zero_matrix());
  CHECK(so8_defect(x).is_zero_matrix());
  CHECK(!TrilinearForm::standard().first_derivation_failure(x));
}

TEST_CASE("a broken derivation is located") {
  auto x = g2_direction("a");
  x(0, 1) = 2;
  const auto fail = TrilinearForm::standard().first_derivation_failure(x);
  REQUIRE(fail.has_value());
}

TEST_CASE("lie model suite") {
  const auto rep = verify_lie_models();
  require_passed(rep);
  CHECK(rep.passed());
  CHECK(rep.checks().size() >= 15);
}

TEST_CASE("root datum") {
  const auto& rd = RootDatum::instance();
  CHECK(rd.roots().size() == 12);
  CHECK(rd.root_of("a") == kAlpha1);
  CHECK(rd.root_of("b") == kAlpha2);
  CHECK(rd.root_of("d") == Root{2, 1});
  CHECK(rd.root_of("f") == Root{3, 2});
  CHECK(rd.root_of("l") == -kAlpha2);
  CHECK(rd.parameter(Root{-3, -1}) == "j");
  std::vector<int> deg;
  for (std::size_t i = 0; i < 8; ++i) deg.push_back(rd.parabolic_degree(i));
  CHECK(deg == std::vector<int>{1, 1, 0, 0, 0, 0, -1, -1});
  CHECK(reflect_alpha2(Root{3, 1}) == Root{3, 2});
  CHECK(reflect_alpha1(kAlpha2) == Root{3, 1});
  CHECK(Root{3, 2}.name() == "3a1+2a2");
  CHECK((-kAlpha1).name() == "-a1");
  CHECK(Root{-1, -1}.name() == "-(a1+a2)");
  CHECK_THROWS_AS(rd.root_matrix(Root{1, 2}), std::invalid_argument);
}

TEST_CASE("one-parameter subgroups") {
  const LaurentPoly u = var("u"), v = var("v");
  const auto& t = TrilinearForm::standard();
  for (Root r : RootDatum::instance().roots()) {
    INFO(r.name());
    const auto x = one_param(r, u);
    CHECK(one_param(r, LaurentPoly()) == Matrix<LaurentPoly>::identity(8));
    CHECK(x * one_param(r, v) == one_param(r, u + v));
    CHECK(preserves_bilinear_form(x));
    CHECK(!t.first_invariance_failure(x));
    CHECK(x * v0(u) == v0(u));
  }
  CHECK(one_param(kAlpha2, u) * one_param(kAlpha2, -u) == Matrix<LaurentPoly>::identity(8));
  const LaurentPoly rho = var("rho");
  CHECK(one_param(kAlpha2, rho * u) * one_param(Root{2, 1}, -u) * v_rho(rho) == v_rho(rho));
}

TEST_CASE("weyl representatives") {
  CHECK_THROWS_AS(weyl_rep(Root{1, 1}, Rational(0)), std::invalid_argument);
  const auto w2 = weyl_rep(kAlpha2, Rational(0));
  CHECK(preserves_bilinear_form(w2));
  CHECK(!TrilinearForm::standard().first_invariance_failure(w2));
  CHECK(!in_parabolic(w2));
  const auto h = torus_word(kAlpha1, Rational(3));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (i != j) CHECK(h(i, j).is_zero());
  CHECK(h != Matrix<Rational>::identity(8));
  CHECK(in_parabolic(one_param(Root{3, 2}, Rational(5))));
  CHECK(in_parabolic(one_param(-kAlpha1, Rational(5))));
  CHECK(!in_parabolic(one_param(-kAlpha2, Rational(5))));
}

TEST_CASE("torus element") {
  const TorusSymbols s;
  CHECK(det(Matrix<LaurentPoly>::from_rows({{s.a, s.b}, {s.b * s.rho, s.a}})) == s.norm());
  const auto rel = s.relations();
  CHECK(rel.equal(det(s.matrix()), LaurentPoly(1)));
  CHECK(rel.reduce(s.ninv * s.norm()) == LaurentPoly(1));
}

TEST_CASE("iwasawa factorizations") {
  const TorusSymbols s;
  const auto rel = s.relations();
  const auto c1 = iwasawa_case1();
  CHECK(rel.equal(c1.u * c1.t * c1.k, s.matrix()));
  CHECK(c1.t(0, 0) == s.norm() * s.a.inverse());
  CHECK(c1.t(5, 5) == s.a * s.a * s.ninv);
  CHECK(!rel.equal(c1.u * c1.t * printed_case1_k(), s.matrix()));
  const auto c2 = iwasawa_case2();
  CHECK(rel.equal(c2.u * c2.t * c2.k, s.matrix()));
  CHECK(c2.t(1, 1) == s.b * s.rho);
  for (const auto& x : c2.k.data()) CHECK(!x.involves("Ninv"));
}

TEST_CASE("iwasawa suite") {
  const auto rep = verify_iwasawa();
  require_passed(rep);
  CHECK(rep.passed());
  CHECK(rep.artifacts().size() == 3);
  CHECK(rep.typo_ledger().size() >= 3);
}

TEST_CASE("modulus characters") {
  CHECK(modulus_characters(0, 0) == ModulusExponents{0, 0, 0});
  CHECK(modulus_characters(1, 1) == ModulusExponents{-1, -1, -2});
  CHECK(modulus_characters(3, 0) == ModulusExponents{-3, 0, -3});
  CHECK_THROWS_AS(modulus_characters(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(modulus_characters(2, 0), std::invalid_argument);
  const auto y = modulus_from_norm_formulas(4, 1);
  CHECK(y.delta_p == -4);
  CHECK(y.alpha2 == -1);
  CHECK(y.delta_b_inv_half == 5);
}
