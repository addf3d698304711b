#include <doctest.h>

#include "g2l/lfunc/identities.hpp"
#include "g2l/lfunc/lfactor.hpp"

using namespace g2l;

namespace {

void require_passed(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) {
    INFO(c.name << ": " << c.detail << " " << c.counterexample.value_or(""));
    CHECK(c.status != Status::fail);
  }
}

const LaurentPoly x = var(kX);
const LaurentPoly q = var(kQ);

}  // namespace

TEST_CASE("L-factor denominators") {
  // Trivial split class: det(1 - x) over an 8-dimensional space.
  CHECK(l_factor_denominator(SplitClass::trivial()) == (LaurentPoly(1) - x).pow(8));
  const auto d = l_factor_denominator(SplitClass{});
  CHECK(d.max_exponent(kX) == 8);
  CHECK(d.coefficient({kX}, {1}) == -schur_char(1, 1));
  const LaurentPoly mu = var("mu");
  CHECK(l_factor_denominator(NonSplitClass{}) == nonsplit_product_denominator(mu));
  CHECK(l_factor_denominator(NonSplitClass{}, true) == nonsplit_product_denominator(mu).substitute(kX, -x));
  const auto series = local_l_factor(SplitClass::trivial(), 3);
  CHECK(series.coefficient({2}) == LaurentPoly(36));
}

TEST_CASE("zeta denominators and candidate triples") {
  CHECK(zeta_denominator(3, 0) == LaurentPoly(1) - q.inverse() * x);
  CHECK(zeta_denominator(6, -2) == LaurentPoly(1) - x * x);
  CHECK(zeta_denominator(9, -3) == LaurentPoly(1) - x.pow(3));
  CHECK(zeta_denominator(3, -9) == LaurentPoly(1) - q.pow(8) * x);
  CHECK_THROWS_AS(zeta_denominator(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(zeta_denominator(0, 1), std::invalid_argument);
  CHECK(ZetaArgument{6, -2}.label() == "zeta(6s-2)");
  CHECK(ZetaArgument{3, 0}.label() == "zeta(3s)");
  CHECK(label(reconstructed_zeta_triple()) == "zeta(3s) zeta(6s-2) zeta(9s-3)");
  CHECK(label(printed_zeta_triple()) == "zeta(3s) zeta(6s-2) zeta(3s-9)");
}

TEST_CASE("inner integral shell sums") {
  for (int vc = -1; vc <= 8; ++vc) {
    INFO("v(c) = " << vc);
    CHECK(inner_integral_agrees(vc));
  }
  // Below v(c) = -1 the oscillation kills every shell.
  CHECK(inner_integral_shell_sum(-2).is_zero());
  CHECK(inner_integral_shell_sum(-3).is_zero());
  CHECK_FALSE(inner_integral_agrees(-2));
  CHECK(inner_integral_shell_sum(0) == LaurentPoly(1) - q.inverse() * x);
  const auto rep = inner_integral_check(-3, 8);
  CHECK_FALSE(rep.passed());
  CHECK(rep.failures() == 2);
}

TEST_CASE("generating function identities") {
  require_passed(poincare_oracle(6));
  CHECK_THROWS_AS(poincare_oracle(11), std::invalid_argument);
  require_passed(split_identity_check(8));
  require_passed(nonsplit_identity_check(8));
  const auto [num, den] = poincare_closed_form();
  CHECK(den.max_exponent(kBigX) == 14);
  CHECK(poincare_series(2).coefficient({1}) == var(kT1) * var(kT2));
}

TEST_CASE("L-factor suites") {
  require_passed(verify_lfactor(PlaceCase::split));
  require_passed(verify_lfactor(PlaceCase::nonsplit));
}

TEST_CASE("unramified computation selects one zeta triple") {
  const auto lhs = unramified_lhs(NonSplitClass{}, 6);
  CHECK(lhs == unramified_rhs(NonSplitClass{}, reconstructed_zeta_triple(), 6));
  CHECK_FALSE(lhs == unramified_rhs(NonSplitClass{}, printed_zeta_triple(), 6));
  for (auto which : {PlaceCase::split, PlaceCase::nonsplit}) {
    const auto rep = proposition_check(which, 6);
    require_passed(rep);
    bool named = false;
    for (const auto& [k, v] : rep.parameters()) named = named || (k == "zeta_triple" && v == label(reconstructed_zeta_triple()));
    CHECK(named);
  }
}
