#include "g2l/reps/adjoint.hpp"

#include <algorithm>

namespace g2l {

const std::array<std::string, 8>& AdjointBasis::names() {
  static const std::array<std::string, 8> n = {"E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"};
  return n;
}

Matrix<Rational> AdjointBasis::element(std::size_t k) {
  Matrix<Rational> m(3, 3, Rational(0));
  static const std::array<std::pair<int, int>, 6> off = {{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
  if (k < 6) {
    m(off[k].first, off[k].second) = 1;
  } else if (k == 6) {
    m(0, 0) = 1;
    m(1, 1) = -1;
  } else if (k == 7) {
    m(1, 1) = 1;
    m(2, 2) = -1;
  } else {
    throw std::out_of_range("AdjointBasis: index " + std::to_string(k));
  }
  return m;
}

Matrix<Rational> r_fr() {
  Matrix<Rational> out(8, 8, Rational(0));
  for (std::size_t k = 0; k < 8; ++k) {
    const auto img = AdjointBasis::coordinates(other_transpose(AdjointBasis::element(k)));
    for (std::size_t r = 0; r < 8; ++r) out(r, k) = img[r];
  }
  return out;
}

Matrix<Rational> r_fr_twisted() { return -r_fr(); }

Matrix<LaurentPoly> class_representative(const SatakeClass& c) {
  if (const auto* s = std::get_if<SplitClass>(&c)) {
    return Matrix<LaurentPoly>::diagonal({s->alpha1, s->alpha2, s->alpha3()});
  }
  const auto& n = std::get<NonSplitClass>(c);
  return Matrix<LaurentPoly>::diagonal({n.mu, LaurentPoly(1), n.mu.inverse()});
}

Matrix<LaurentPoly> r_of_class(const SatakeClass& c, bool twisted) {
  const auto g = class_representative(c);
  const auto rg = r_matrix(g);
  if (std::holds_alternative<SplitClass>(c)) return rg;
  return rg * lift(twisted ? r_fr_twisted() : r_fr(), LaurentPoly());
}

EigenSplit fr_eigensplit(const LaurentPoly& mu) {
  const auto t = r_matrix(Matrix<LaurentPoly>::diagonal({mu, LaurentPoly(1), mu.inverse()}));
  const auto fr = lift(r_fr(), LaurentPoly());
  if (!(t * fr == fr * t)) throw std::logic_error("fr_eigensplit: torus does not commute with Fr");
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (i != j && !t(i, j).is_zero()) throw std::logic_error("fr_eigensplit: torus is not diagonal");

  // The projectors (1 +- Fr)/2 commute with the diagonal torus, so they are
  // block diagonal over its eigenvalues; the rank of each block is the
  // multiplicity of that eigenvalue on the eigenspace.
  const auto id = Matrix<LaurentPoly>::identity(8);
  const LaurentPoly half(Rational(1, 2));
  EigenSplit out;
  for (int sign : {1, -1}) {
    const auto proj = half * (sign == 1 ? id + fr : id - fr);
    std::vector<LaurentPoly> seen;
    auto& dest = sign == 1 ? out.plus : out.minus;
    for (std::size_t i = 0; i < 8; ++i) {
      const auto& w = t(i, i);
      if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
      seen.push_back(w);
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < 8; ++j)
        if (t(j, j) == w) idx.push_back(j);
      Matrix<LaurentPoly> block(idx.size(), idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) block(a, b) = proj(idx[a], idx[b]);
      for (std::size_t m = rank(block); m > 0; --m) dest.push_back(w);
    }
  }
  auto by_mu = [&mu](const LaurentPoly& a, const LaurentPoly& b) {
    if (!mu.is_monomial() || mu.is_constant()) return false;
    const std::string v = mu.variables().front();
    return a.max_exponent(v) > b.max_exponent(v);
  };
  std::stable_sort(out.plus.begin(), out.plus.end(), by_mu);
  std::stable_sort(out.minus.begin(), out.minus.end(), by_mu);
  return out;
}

}  // namespace g2l
