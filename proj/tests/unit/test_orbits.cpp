#include <doctest.h>

#include "g2l/g2model/forms.hpp"
#include "g2l/g2model/roots.hpp"
#include "g2l/orbits/finite_field.hpp"
#include "g2l/orbits/orbits.hpp"

using namespace g2l;

TEST_CASE("prime field arithmetic") {
  const Fp a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((-a).value() == 4);
  CHECK(a.inverse() == b);
  CHECK(Fp(-1, 7).value() == 6);
  CHECK(from_rational(Rational(1, 2), a).value() == 4);
  CHECK_THROWS(from_rational(Rational(1, 7), a));
  CHECK_THROWS(Fp(0, 7).inverse());
  CHECK((Fp() + a) == a);
  CHECK(is_prime(251));
  CHECK_FALSE(is_prime(91));
  CHECK(is_square_mod(4, 5));
  CHECK_FALSE(is_square_mod(2, 5));
  CHECK(is_square_mod(2, 7));
  CHECK_FALSE(is_square_mod(3, 7));
}

TEST_CASE("packed vectors and matrix action") {
  const std::array<std::uint32_t, 8> v{1, 2, 3, 4, 5, 6, 0, 250};
  CHECK(unpack(pack(v)) == v);
  CHECK(v3_block_zero(pack({1, 1, 1, 1, 1, 1, 0, 0})));
  CHECK_FALSE(v3_block_zero(pack({0, 0, 0, 0, 0, 0, 0, 1})));
  const FpMatrix x(one_param(kAlpha1, Fp(2, 5)));
  const auto dense = one_param(kAlpha1, Fp(2, 5));
  const std::array<std::uint32_t, 8> w{1, 0, 3, 0, 0, 4, 2, 1};
  Matrix<Fp> col(8, 1, Fp(0, 5));
  for (int i = 0; i < 8; ++i) col(i, 0) = Fp(w[i], 5);
  const auto image = dense * col;
  std::array<std::uint32_t, 8> expect{};
  for (int i = 0; i < 8; ++i) expect[i] = image(i, 0).value();
  CHECK(unpack(x.apply(pack(w))) == expect);
  CHECK(preserves_bilinear_form(dense));
  CHECK(!TrilinearForm::standard().first_invariance_failure(dense));
}

TEST_CASE("generators and orbit enumeration") {
  CHECK_THROWS_AS(group_generators(4, GeneratorSet::full), std::invalid_argument);
  CHECK_THROWS_AS(group_generators(3, GeneratorSet::full), std::invalid_argument);
  const auto full = group_generators(5, GeneratorSet::full);
  const auto para = group_generators(5, GeneratorSet::parabolic);
  CHECK(para.size() < full.size());
  for (const auto& g : para) CHECK(in_parabolic(g.matrix()));
  const PackedVector start = pack({0, 0, 1, 0, 0, 2, 0, 0});
  CHECK_THROWS_AS(orbit(start, full, 100), std::length_error);
  // v0 is fixed by G2.
  const auto fixed = orbit(pack({0, 0, 0, 1, 4, 0, 0, 0}), full);
  CHECK(fixed.size() == 1);
}

TEST_CASE("sphere counts") {
  // Brute force over all of V0 for q = 5.
  for (std::uint32_t rho : {1u, 2u, 3u, 4u}) {
    std::uint64_t n = 0;
    const std::uint32_t q = 5;
    for (std::uint32_t idx = 0; idx < 5 * 5 * 5 * 5 * 5 * 5 * 5; ++idx) {
      std::uint32_t c[7], t = idx;
      for (auto& ci : c) { ci = t % q; t /= q; }
      // v = (c0, c1, c2, c3, c3, c4, c5, c6)
      const std::uint64_t s = c[0] * c[6] + c[1] * c[5] + c[2] * c[4] + c[3] * c[3];
      n += (s % q == rho % q);
    }
    CHECK(sphere_count(5, rho) == n);
  }
}

TEST_CASE("double coset analogue over F_5") {
  for (std::uint32_t rho : {2u, 4u}) {
    const auto rep = double_coset_check(5, rho);
    for (const auto& c : rep.checks()) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.status != Status::fail);
    }
  }
  CHECK_THROWS_AS(double_coset_check(5, 10), std::invalid_argument);
}
