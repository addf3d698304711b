#pragma once

#include <cstdint>
#include <string>

#include "g2l/algebra/rational.hpp"

namespace g2l {

/// Element of the prime field F_p, p < 2^16.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v_ + b.v_, a.mod(b)); }
  friend Fp operator-(Fp a, Fp b) { return Fp(static_cast<std::int64_t>(a.v_) - b.v_, a.mod(b)); }
  friend Fp operator*(Fp a, Fp b) {
    return Fp(static_cast<std::int64_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % a.mod(b)), a.mod(b));
  }
  friend Fp operator-(Fp a) { return Fp(-static_cast<std::int64_t>(a.v_), a.p_); }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

 private:
  /// Modulus shared by two operands; a default-constructed zero adopts the other's.
  std::uint32_t mod(Fp o) const { return p_ ? p_ : o.p_; }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline Fp exact_div(const Fp& a, const Fp& b) { return a * b.inverse(); }
Fp from_rational(const Rational& r, const Fp& like);
inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

bool is_prime(std::uint32_t n);
/// Legendre-symbol test for a nonzero residue; p odd prime.
bool is_square_mod(std::int64_t a, std::uint32_t p);

}  // namespace g2l
