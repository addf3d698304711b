#pragma once

#include <concepts>
#include <string>

#include "g2l/algebra/laurent.hpp"
#include "g2l/algebra/rational.hpp"

namespace g2l {

// Uniform ring interface used by Matrix and the linear algebra routines.
// Scalars that need context (finite-field elements carry their modulus) take
// it from a prototype value.

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Rational from_rational(const Rational& r, const Rational&) { return r; }
inline std::string to_string(const Rational& r) { return r.to_string(); }

inline LaurentPoly zero_like(const LaurentPoly&) { return LaurentPoly(); }
inline LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly(1); }
inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline LaurentPoly from_rational(const Rational& r, const LaurentPoly&) { return LaurentPoly(r); }
inline std::string to_string(const LaurentPoly& p) { return p.to_string(); }

template <class S>
concept ExactRing = requires(const S& a, const S& b, const Rational& q) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<S>;
  { one_like(a) } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { exact_div(a, b) } -> std::convertible_to<S>;
  { from_rational(q, a) } -> std::convertible_to<S>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

}  // namespace g2l
