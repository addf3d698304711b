#include "g2l/algebra/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2l {

TruncatedSeries::TruncatedSeries(LaurentPoly poly, std::vector<std::string> series_vars, int bound)
    : vars_(std::move(series_vars)), bound_(bound) {
  if (bound < 0) throw std::invalid_argument("TruncatedSeries: negative bound");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  for (const auto& v : vars_) {
    if (poly.min_exponent(v) < 0) {
      throw std::invalid_argument("TruncatedSeries: negative exponent of series variable '" + v +
                                  "' in " + poly.to_string());
    }
  }
  poly_ = poly.truncated(vars_, bound_);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("TruncatedSeries: different series variables");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  bound_ = std::min(bound_, o.bound_);
  poly_ = (poly_ + o.poly_).truncated(vars_, bound_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  bound_ = std::min(bound_, o.bound_);
  poly_ = (poly_ - o.poly_).truncated(vars_, bound_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  check_compatible(o);
  bound_ = std::min(bound_, o.bound_);
  poly_ = poly_.mul_truncated(o.poly_, vars_, bound_);
  return *this;
}

TruncatedSeries TruncatedSeries::inverse() const {
  std::vector<LaurentPoly> d(static_cast<std::size_t>(bound_) + 1);
  for (int k = 0; k <= bound_; ++k) d[static_cast<std::size_t>(k)] = part(k);
  const LaurentPoly& d0 = d[0];
  if (d0.is_zero() || !d0.is_monomial()) {
    throw std::domain_error("series inverse: constant term '" + d0.to_string() +
                            "' is not invertible; denominator = " + poly_.to_string());
  }
  const LaurentPoly c0 = d0.inverse();
  std::vector<LaurentPoly> c(d.size());
  c[0] = c0;
  for (std::size_t n = 1; n < d.size(); ++n) {
    LaurentPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!d[k].is_zero() && !c[n - k].is_zero()) acc += d[k] * c[n - k];
    }
    c[n] = -(c0 * acc);
  }
  LaurentPoly sum;
  for (auto& part_n : c) sum += part_n;
  return TruncatedSeries(sum, vars_, bound_);
}

std::optional<TruncatedSeries::Difference> TruncatedSeries::first_difference(
    const TruncatedSeries& o) const {
  check_compatible(o);
  const int b = std::min(bound_, o.bound_);
  const LaurentPoly diff = (poly_ - o.poly_).truncated(vars_, b);
  if (diff.is_zero()) return std::nullopt;
  const auto groups = diff.collect(vars_);
  const std::vector<int>* best = nullptr;
  int best_deg = 0;
  for (const auto& [e, c] : groups) {
    int deg = 0;
    for (int x : e) deg += x;
    if (best == nullptr || deg < best_deg) {
      best = &e;
      best_deg = deg;
    }
  }
  return Difference{*best, coefficient(*best), o.coefficient(*best)};
}

std::string TruncatedSeries::to_string() const {
  std::string out = poly_.to_string() + " + O(";
  for (std::size_t i = 0; i < vars_.size(); ++i) out += (i ? "," : "") + vars_[i];
  return out + ")^" + std::to_string(bound_ + 1);
}

TruncatedSeries series_expand(const LaurentPoly& numerator, const LaurentPoly& denominator,
                              const std::vector<std::string>& vars, int bound) {
  TruncatedSeries den(denominator, vars, bound);
  const LaurentPoly d0 = den.part(0);
  if (d0.is_zero() || !d0.is_monomial()) {
    throw std::domain_error("series_expand: denominator " + denominator.to_string() +
                            " has non-invertible constant term '" + d0.to_string() + "'");
  }
  return TruncatedSeries(numerator, vars, bound) * den.inverse();
}

}  // namespace g2l
