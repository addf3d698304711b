#include "g2l/orbits/finite_field.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace g2l {

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p == 0) {
    if (value != 0) throw std::invalid_argument("Fp: nonzero value without modulus");
    return;
  }
  const std::int64_t m = static_cast<std::int64_t>(p);
  v_ = static_cast<std::uint32_t>(((value % m) + m) % m);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = v_, e = p_ - 2;
  while (e) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
    e >>= 1U;
  }
  return Fp(static_cast<std::int64_t>(result), p_);
}

Fp from_rational(const Rational& r, const Fp& like) {
  const std::uint32_t p = like.modulus();
  if (p == 0) throw std::invalid_argument("from_rational: prototype has no modulus");
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  const mpz_class pm(p);
  const mpz_class n = ((num % pm) + pm) % pm;
  const mpz_class d = den % pm;
  if (d == 0) {
    throw std::domain_error("from_rational: denominator of " + r.to_string() + " vanishes mod " +
                            std::to_string(p));
  }
  return Fp(n.get_si(), p) * Fp(d.get_si(), p).inverse();
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_square_mod(std::int64_t a, std::uint32_t p) {
  const Fp x(a, p);
  if (x.value() == 0) return true;
  Fp r(1, p);
  for (std::uint32_t e = 0; e < (p - 1) / 2; ++e) r = r * x;
  return r.value() == 1;
}

}  // namespace g2l
