#include "g2l/g2model/roots.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "g2l/g2model/forms.hpp"
#include "g2l/g2model/lie.hpp"

namespace g2l {

std::string Root::name() const {
  if (c1 == 0 && c2 == 0) return "0";
  const bool negative = c1 < 0 || (c1 == 0 && c2 < 0);
  const int a = std::abs(c1);
  const int b = std::abs(c2);
  auto term = [](int k, const char* name) {
    return k == 1 ? std::string(name) : std::to_string(k) + name;
  };
  std::string s;
  if (a) s += term(a, "a1");
  if (a && b) s += "+";
  if (b) s += term(b, "a2");
  if (!negative) return s;
  return (a && b) ? "-(" + s + ")" : "-" + s;
}

Root reflect_alpha2(Root r) { return {r.c1, r.c1 - r.c2}; }
Root reflect_alpha1(Root r) { return {3 * r.c2 - r.c1, r.c2}; }

namespace {

struct Weight {
  int p = 0;  // coefficient of T1
  int q = 0;  // coefficient of T2
};

int to_int(const Rational& r) {
  if (!r.is_integer()) throw std::logic_error("RootDatum: non-integral weight");
  return static_cast<int>(std::stol(r.to_string()));
}

}  // namespace

RootDatum::RootDatum() {
  const auto h1 = g2_direction("T1");
  const auto h2 = g2_direction("T2");
  std::vector<Weight> w(kDim);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = {to_int(h1(i, i)), to_int(h2(i, i))};

  auto weight_of = [&](const Matrix<Rational>& m) {
    std::optional<Weight> found;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(r, c).is_zero()) continue;
        Weight x{w[r].p - w[c].p, w[r].q - w[c].q};
        if (found && (found->p != x.p || found->q != x.q)) {
          throw std::logic_error("RootDatum: direction is not a weight vector");
        }
        found = x;
      }
    return *found;
  };

  // alpha1 and alpha2 are the weights of the a and b directions; every other
  // weight is solved in that basis (the change of basis is unimodular).
  const Weight a1 = weight_of(g2_direction("a"));
  const Weight a2 = weight_of(g2_direction("b"));
  const int det = a1.p * a2.q - a1.q * a2.p;
  if (std::abs(det) != 1) throw std::logic_error("RootDatum: simple roots not a lattice basis");
  auto coords = [&](Weight x) {
    return Root{(x.p * a2.q - x.q * a2.p) / det, (a1.p * x.q - a1.q * x.p) / det};
  };

  for (const auto& name : g2_parameter_names()) {
    if (name == "T1" || name == "T2") continue;
    auto m = g2_direction(name);
    roots_.push_back(coords(weight_of(m)));
    params_.push_back(name);
    mats_.push_back(std::move(m));
  }
  for (const auto& x : w) weights_.push_back(coords(x));
}

const RootDatum& RootDatum::instance() {
  static const RootDatum rd;
  return rd;
}

std::vector<Root> RootDatum::positive_roots() const {
  std::vector<Root> out;
  for (auto r : roots_)
    if (r.is_positive()) out.push_back(r);
  return out;
}

bool RootDatum::is_root(Root r) const {
  return std::find(roots_.begin(), roots_.end(), r) != roots_.end();
}

namespace {
template <class V>
std::size_t position(const V& v, Root r) {
  const auto it = std::find(v.begin(), v.end(), r);
  if (it == v.end()) throw std::invalid_argument("not a root of G2: " + r.name());
  return static_cast<std::size_t>(it - v.begin());
}
}  // namespace

const std::string& RootDatum::parameter(Root r) const { return params_[position(roots_, r)]; }

Root RootDatum::root_of(const std::string& parameter) const {
  const auto it = std::find(params_.begin(), params_.end(), parameter);
  if (it == params_.end()) throw std::invalid_argument("not a root parameter: " + parameter);
  return roots_[static_cast<std::size_t>(it - params_.begin())];
}

const Matrix<Rational>& RootDatum::root_matrix(Root r) const { return mats_[position(roots_, r)]; }

Rational coroot_scale(Root r) {
  const auto& rd = RootDatum::instance();
  const auto& e = rd.root_matrix(r);
  const auto& f = rd.root_matrix(-r);
  const auto h = bracket(e, f);
  const auto he = bracket(h, e);
  // he = lambda e for some rational lambda; c = 2 / lambda.
  for (std::size_t k = 0; k < e.data().size(); ++k) {
    if (!e.data()[k].is_zero()) {
      const Rational lambda = he.data()[k] / e.data()[k];
      if (!(he == lambda * e)) throw std::logic_error("coroot_scale: [h,e] not proportional to e");
      return Rational(2) / lambda;
    }
  }
  throw std::logic_error("coroot_scale: zero root matrix");
}

}  // namespace g2l
