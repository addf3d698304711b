#include "g2l/algebra/rational.hpp"

#include <stdexcept>

namespace g2l {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(std::move(v));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class r = 1;
  mpq_class b = value_;
  unsigned u = static_cast<unsigned>(e);
  while (u != 0) {
    if (u & 1U) r *= b;
    b *= b;
    u >>= 1U;
  }
  return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace g2l
