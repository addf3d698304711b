#include "g2l/g2model/forms.hpp"

#include <algorithm>

namespace g2l {

Matrix<Rational> bilinear_form() {
  Matrix<Rational> j(kDim, kDim, Rational(0));
  for (std::size_t i = 0; i < kDim; ++i) j(i, kDim - 1 - i) = 1;
  return j;
}

namespace {

using OneForm = std::array<int, 8>;

OneForm coord(int k) {
  OneForm f{};
  f[k - 1] = 1;
  return f;
}

int det3(const std::array<std::array<int, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TrilinearForm::TrilinearForm() {
  t_.fill(Rational(0));
  const OneForm e45{0, 0, 0, 1, 1, 0, 0, 0};
  struct Wedge {
    OneForm u, v, w;
    int coeff;
  };
  const std::vector<Wedge> terms = {
      {coord(7), e45, coord(2), 1},       {coord(1), e45, coord(8), 1},
      {coord(6), e45, coord(3), 1},       {coord(3), coord(2), coord(8), 2},
      {coord(6), coord(7), coord(1), -2},
  };
  // (u^v^w)(x,y,z) = det of the 3x3 matrix of the one-forms evaluated at x, y, z.
  for (const auto& t : terms) {
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y)
        for (int z = 0; z < 8; ++z) {
          const int d = det3({{{t.u[x], t.u[y], t.u[z]},
                               {t.v[x], t.v[y], t.v[z]},
                               {t.w[x], t.w[y], t.w[z]}}});
          if (d != 0) t_[index(x, y, z)] += Rational(t.coeff * d);
        }
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k)
        if (!t_[index(i, j, k)].is_zero()) nz_.push_back({i, j, k, t_[index(i, j, k)]});
}

const TrilinearForm& TrilinearForm::standard() {
  static const TrilinearForm form;
  return form;
}

bool TrilinearForm::is_alternating() const {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        const Rational& v = (*this)(i, j, k);
        if ((i == j || j == k || i == k) && !v.is_zero()) return false;
        if ((*this)(j, i, k) != -v || (*this)(i, k, j) != -v || (*this)(k, j, i) != -v) return false;
      }
  return true;
}

std::string triple_label(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
         std::to_string(t[2] + 1) + ")";
}

}  // namespace g2l
