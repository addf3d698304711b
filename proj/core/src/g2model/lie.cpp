#include "g2l/g2model/lie.hpp"

#include <algorithm>

#include "g2l/algebra/linalg.hpp"
#include "g2l/errata.hpp"
#include "g2l/g2model/forms.hpp"
#include "g2l/g2model/roots.hpp"

namespace g2l {

const std::array<std::string, 14>& g2_parameter_names() {
  static const std::array<std::string, 14> names = {"T1", "T2", "a", "b", "c", "d", "e",
                                                    "f",  "g",  "h", "i", "j", "k", "l"};
  return names;
}

const std::array<std::string, 8>& su21_parameter_names() {
  static const std::array<std::string, 8> names = {"T1", "a", "d", "e", "f", "h", "k", "l"};
  return names;
}

namespace {

template <std::size_t N>
std::size_t index_of(const std::array<std::string, N>& names, const std::string& p) {
  const auto it = std::find(names.begin(), names.end(), p);
  if (it == names.end()) throw std::invalid_argument("unknown parameter: " + p);
  return static_cast<std::size_t>(it - names.begin());
}

std::string entry_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

template <ExactRing S>
std::optional<std::string> first_nonzero(const Matrix<S>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return "entry " + entry_label(i, j) + " = " + to_string(m(i, j));
  return std::nullopt;
}

void check_zero(VerificationReport& rep, const std::string& name, const std::string& detail,
                const std::optional<std::string>& failure) {
  rep.check(!failure, name, detail, failure.value_or(""));
}

template <ExactRing S>
std::optional<std::string> derivation_failure(const Matrix<S>& x) {
  const auto& t = TrilinearForm::standard();
  if (auto f = t.first_derivation_failure(x)) {
    return "T-derivation fails on basis triple " + triple_label(*f) + ": " +
           to_string(t.derivation_defect(x, (*f)[0], (*f)[1], (*f)[2]));
  }
  return std::nullopt;
}

/// Returns the first pair whose bracket leaves the span, or nothing.
template <ExactRing S>
std::optional<std::string> bracket_closure_failure(const std::vector<Matrix<S>>& basis,
                                                   const std::vector<std::string>& names,
                                                   std::size_t dim) {
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = p + 1; q < basis.size(); ++q) {
      auto with = basis;
      with.push_back(bracket(basis[p], basis[q]));
      if (rank(flatten_columns(with)) != dim) return "[" + names[p] + "," + names[q] + "] leaves the span";
    }
  return std::nullopt;
}

/// The six vectors e1, e2, e3 - rho e6, e4 + e5, e7, e8 spanning the
/// orthogonal complement of v0 and v_rho, their images in E^3 (E = F(tau),
/// tau^2 = rho), and the E-linear map the SU(2,1) display induces on E^3.
void check_basis_identification(VerificationReport& rep) {
  const LaurentPoly tau = var("tau");
  const LaurentPoly rho = tau * tau;
  const LaurentPoly z;
  const LaurentPoly one(1);
  std::vector<Matrix<LaurentPoly>> six(6, Matrix<LaurentPoly>(8, 1, z));
  six[0](0, 0) = one;
  six[1](1, 0) = one;
  six[2](2, 0) = one;
  six[2](5, 0) = -rho;
  six[3](3, 0) = one;
  six[3](4, 0) = one;
  six[4](6, 0) = one;
  six[5](7, 0) = one;
  const Matrix<LaurentPoly> tinv_m = column<LaurentPoly>({-tau.inverse(), z, z});
  const std::vector<Matrix<LaurentPoly>> images = {
      column<LaurentPoly>({one, z, z}),          tinv_m,
      column<LaurentPoly>({z, -2 * tau, z}),     column<LaurentPoly>({z, LaurentPoly(-2), z}),
      column<LaurentPoly>({z, z, 2 * tau}),      column<LaurentPoly>({z, z, LaurentPoly(2)}),
  };

  bool orth = true;
  const auto vr = v_rho(rho);
  const auto w0 = v0(rho);
  for (const auto& v : six) orth = orth && is_zero(pairing(v, vr)) && is_zero(pairing(v, w0));
  rep.check(orth, "basis identification: six vectors orthogonal to v0 and v_rho");

  std::array<LaurentPoly, 8> p;
  const auto& names = su21_parameter_names();
  for (std::size_t k = 0; k < 8; ++k) p[k] = var(names[k]);
  const auto x = su21_element(p, rho);
  const auto& [T1, a, d, e, f, h, k, l] = p;

  // Coordinates in the six-vector basis of a vector lying in its span.
  auto coords = [&](const Matrix<LaurentPoly>& w) -> std::optional<std::array<LaurentPoly, 6>> {
    if (!is_zero(w(3, 0) - w(4, 0)) || !is_zero(w(5, 0) + rho * w(2, 0))) return std::nullopt;
    return std::array<LaurentPoly, 6>{w(0, 0), w(1, 0), w(2, 0), w(3, 0), w(6, 0), w(7, 0)};
  };
  auto phi = [&](const std::array<LaurentPoly, 6>& y) {
    Matrix<LaurentPoly> out(3, 1, z);
    for (std::size_t r = 0; r < 6; ++r) out = out + y[r] * images[r];
    return out;
  };

  const LaurentPoly half_tinv = tau.inverse() * LaurentPoly(Rational(1, 2));
  const auto y = Matrix<LaurentPoly>::from_rows({
      {T1 - a * tau, -d + e * tau, f * half_tinv},
      {2 * tau * (-h + l * tau), 2 * a * tau, d + e * tau},
      {2 * k * tau, 2 * tau * (-h - l * tau), -T1 - a * tau},
  });

  bool in_span = true;
  bool e_linear = true;
  std::string why;
  for (std::size_t c = 0; c < 6; ++c) {
    const auto w = coords(x * six[c]);
    if (!w) {
      in_span = false;
      why = "image of basis vector " + std::to_string(c + 1) + " leaves the span";
      break;
    }
    std::array<LaurentPoly, 6> unit{};
    unit[c] = one;
    if (!(y * phi(unit) == phi(*w))) {
      e_linear = false;
      why = "E-linear action differs on basis vector " + std::to_string(c + 1);
    }
  }
  rep.check(in_span, "basis identification: su21 preserves the six-dimensional span", "", why);
  rep.check(e_linear, "basis identification: su21 acts E-linearly on E^3",
            "the induced 3x3 matrix over E = F(tau) is fixed by its first, fourth and sixth columns", why);

  const auto j3 = Matrix<LaurentPoly>::from_rows({{z, z, one}, {z, one, z}, {one, z, z}});
  const auto ybar = y.map([](const LaurentPoly& v) { return v.substitute("tau", -var("tau")); });
  const auto herm = y * j3 + j3 * ybar.transpose();
  check_zero(rep, "basis identification: induced action is skew-Hermitian for J3",
             "Y J3 + J3 conj(Y)^t = 0", first_nonzero(herm));
  rep.check(is_zero(trace(y)), "basis identification: induced action is traceless");
}

}  // namespace

Matrix<LaurentPoly> g2_generic() {
  std::array<LaurentPoly, 14> p;
  for (std::size_t k = 0; k < 14; ++k) p[k] = var(g2_parameter_names()[k]);
  return g2_element(p);
}

Matrix<LaurentPoly> su21_generic() {
  std::array<LaurentPoly, 8> p;
  for (std::size_t k = 0; k < 8; ++k) p[k] = var(su21_parameter_names()[k]);
  return su21_element(p, var("rho"));
}

Matrix<Rational> g2_direction(const std::string& parameter) {
  std::array<Rational, 14> p{};
  p[index_of(g2_parameter_names(), parameter)] = 1;
  return g2_element(p);
}

Matrix<LaurentPoly> su21_direction(const std::string& parameter) {
  std::array<LaurentPoly, 8> p{};
  p[index_of(su21_parameter_names(), parameter)] = 1;
  return su21_element(p, var("rho"));
}

VerificationReport verify_lie_models() {
  VerificationReport rep("lie");
  const auto& t = TrilinearForm::standard();
  const LaurentPoly rho = var("rho");

  rep.check(t.is_alternating(), "trilinear form is alternating",
            std::to_string(t.nonzero().size()) + " nonzero tensor entries");
  rep.check(pairing(v0(rho), v0(rho)) == LaurentPoly(-2), "<v0,v0> = -2");
  rep.check(pairing(v_rho(rho), v_rho(rho)) == 2 * rho, "<v_rho,v_rho> = 2 rho");
  rep.check(is_zero(pairing(v0(rho), v_rho(rho))), "v_rho lies in V0");

  // G2 display in 14 independent symbols.
  const auto x = g2_generic();
  check_zero(rep, "g2 display satisfies X J + J X^t = 0", "14 symbolic parameters",
             first_nonzero(so8_defect(x)));
  check_zero(rep, "g2 display is a derivation of T", "all 56 basis triples", derivation_failure(x));
  check_zero(rep, "g2 display kills v0", "", first_nonzero(x * v0(rho)));

  std::vector<Matrix<Rational>> g2_basis;
  std::vector<std::string> g2_names(g2_parameter_names().begin(), g2_parameter_names().end());
  for (const auto& n : g2_names) g2_basis.push_back(g2_direction(n));
  const auto g2_dim = rank(flatten_columns(g2_basis));
  rep.check(g2_dim == 14, "g2 display has dimension 14", "rank " + std::to_string(g2_dim));
  check_zero(rep, "g2 display is closed under bracket", "all 91 brackets lie in the span",
             bracket_closure_failure(g2_basis, g2_names, 14));

  // SU(2,1) display in 8 symbols and symbolic rho.
  const auto s = su21_generic();
  std::array<LaurentPoly, 8> sp;
  for (std::size_t k = 0; k < 8; ++k) sp[k] = var(su21_parameter_names()[k]);
  check_zero(rep, "su21 display is the g2 display under c=-rho e, b=-rho d, T2=2T1, g=rho a, "
                  "i=-rho l, j=-rho h", "", first_nonzero(s - g2_element(su21_to_g2(sp, rho))));
  check_zero(rep, "su21 display satisfies X J + J X^t = 0", "", first_nonzero(so8_defect(s)));
  check_zero(rep, "su21 display is a derivation of T", "8 symbolic parameters and symbolic rho",
             derivation_failure(s));
  check_zero(rep, "su21 display kills v_rho", "", first_nonzero(s * v_rho(rho)));

  std::vector<Matrix<LaurentPoly>> su_basis;
  std::vector<std::string> su_names(su21_parameter_names().begin(), su21_parameter_names().end());
  for (const auto& n : su_names) su_basis.push_back(su21_direction(n));
  const auto su_dim = rank(flatten_columns(su_basis));
  rep.check(su_dim == 8, "su21 display has dimension 8", "rank " + std::to_string(su_dim));
  check_zero(rep, "su21 display is closed under bracket", "all 28 brackets lie in the span",
             bracket_closure_failure(su_basis, su_names, 8));

  // Stabilizer of v_rho inside the G2 display: the linear map params -> X v_rho.
  Matrix<LaurentPoly> system(8, 14, LaurentPoly());
  for (std::size_t p = 0; p < 14; ++p) {
    const auto col = lift(g2_basis[p], rho) * v_rho(rho);
    for (std::size_t r = 0; r < 8; ++r) system(r, p) = col(r, 0);
  }
  const auto sys_rank = rank(system);
  const auto nullity = 14 - sys_rank;
  rep.check(nullity == 8, "stabilizer of v_rho in the g2 display has dimension 8",
            "rank of X -> X v_rho is " + std::to_string(sys_rank));
  rep.check(nullity == su_dim, "su21 display is the full stabilizer of v_rho",
            "contained in it and of equal dimension");

  check_basis_identification(rep);

  // Root data from torus weights.
  const auto& rd = RootDatum::instance();
  std::vector<Root> expected;
  for (Root r : {Root{1, 0}, Root{0, 1}, Root{1, 1}, Root{2, 1}, Root{3, 1}, Root{3, 2}}) {
    expected.push_back(r);
    expected.push_back(-r);
  }
  auto got = rd.roots();
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  std::string map_detail;
  for (const auto& n : g2_names)
    if (n != "T1" && n != "T2") map_detail += (map_detail.empty() ? "" : ", ") + n + "=" + rd.root_of(n).name();
  rep.check(got == expected, "parameter-to-root map is a bijection onto the roots of G2", map_detail);
  std::string grading_failure;
  for (Root x : rd.roots())
    for (Root y : rd.roots()) {
      const auto br = bracket(rd.root_matrix(x), rd.root_matrix(y));
      const Root sum = x + y;
      bool ok;
      if (sum == Root{}) {
        ok = true;
        for (std::size_t i = 0; i < 8; ++i)
          for (std::size_t j = 0; j < 8; ++j)
            if (i != j && !br(i, j).is_zero()) ok = false;
      } else if (rd.is_root(sum)) {
        const auto& e = rd.root_matrix(sum);
        ok = rank(flatten_columns(std::vector{e, br})) == 1;
      } else {
        ok = br.is_zero_matrix();
      }
      if (!ok && grading_failure.empty()) grading_failure = "[" + x.name() + "," + y.name() + "]";
    }
  rep.check(grading_failure.empty(), "bracket grading [g_x, g_y] lies in g_{x+y}", "all 144 pairs",
            grading_failure);
  rep.add_typo(errata::bilinear_form_shape());

  // The e and f directions of the SU(2,1) display: a two-dimensional abelian
  // unipotent subalgebra fixing v_rho, whose exponentials lie in G2.
  const auto ee = su21_direction("e");
  const auto ff = su21_direction("f");
  const auto u = var("u");
  const auto w = var("w");
  const auto n2 = exp_nilpotent(Matrix<LaurentPoly>(u * ee + w * ff));
  bool n2_ok = bracket(ee, ff).is_zero_matrix() && rank(flatten_columns(std::vector{ee, ff})) == 2;
  n2_ok = n2_ok && n2 * v_rho(rho) == v_rho(rho) && preserves_bilinear_form(n2) &&
          !t.first_invariance_failure(n2) && exp_nilpotent(Matrix<LaurentPoly>(u * ee)) *
                                                     exp_nilpotent(Matrix<LaurentPoly>(w * ff)) ==
                                                 n2;
  rep.check(n2_ok, "e,f coordinates span an abelian 2-dimensional unipotent subgroup fixing v_rho");

  // N2 coset representative.
  const auto rep_n2 = one_param(kAlpha2, rho * u) * one_param(Root{2, 1}, -u);
  rep.check(rep_n2 * v_rho(rho) == v_rho(rho), "x_{a2}(rho u) x_{2a1+a2}(-u) fixes v_rho");
  return rep;
}

}  // namespace g2l
