#include "g2l/orbits/orbits.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "g2l/g2model/forms.hpp"
#include "g2l/g2model/roots.hpp"

namespace g2l {

PackedVector pack(const std::array<std::uint32_t, 8>& v) {
  PackedVector out = 0;
  for (int i = 0; i < 8; ++i) out |= static_cast<PackedVector>(v[i] & 0xFFU) << (8 * i);
  return out;
}

std::array<std::uint32_t, 8> unpack(PackedVector v) {
  std::array<std::uint32_t, 8> out{};
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint32_t>((v >> (8 * i)) & 0xFFU);
  return out;
}

FpMatrix::FpMatrix(const Matrix<Fp>& m) : m_(m), p_(m(0, 0).modulus()) {
  if (m.rows() != 8 || m.cols() != 8) throw std::invalid_argument("FpMatrix: expected 8x8");
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      if (m(i, j).modulus() != 0 && m(i, j).modulus() != p_) p_ = std::max(p_, m(i, j).modulus());
      a_[i * 8 + j] = m(i, j).value();
    }
}

PackedVector FpMatrix::apply(PackedVector v) const {
  const auto x = unpack(v);
  std::array<std::uint32_t, 8> y{};
  for (std::size_t i = 0; i < 8; ++i) {
    std::uint32_t s = 0;
    for (std::size_t j = 0; j < 8; ++j) s += a_[i * 8 + j] * x[j];
    y[i] = s % p_;
  }
  return pack(y);
}

namespace {

void require_field(std::uint32_t q) {
  if (!is_prime(q) || q < 5 || q > 255) {
    throw std::invalid_argument("orbits: q = " + std::to_string(q) + " must be a prime with 5 <= q < 256");
  }
}

}  // namespace

std::vector<FpMatrix> group_generators(std::uint32_t q, GeneratorSet which) {
  require_field(q);
  const auto& rd = RootDatum::instance();
  std::vector<Root> roots;
  for (Root r : rd.roots())
    if (which == GeneratorSet::full || r.is_positive() || r == -kAlpha1) roots.push_back(r);
  std::vector<Matrix<Fp>> mats;
  for (Root r : roots)
    for (std::uint32_t t = 1; t < q; ++t) mats.push_back(one_param(r, Fp(t, q)));
  for (Root r : rd.positive_roots())
    for (std::uint32_t t = 2; t < q; ++t) mats.push_back(torus_word(r, Fp(t, q)));
  std::vector<FpMatrix> out;
  for (auto& m : mats) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const FpMatrix& g) { return g.matrix() == m; });
    if (!dup) out.emplace_back(m);
  }
  return out;
}

std::unordered_set<PackedVector> orbit(PackedVector v, const std::vector<FpMatrix>& gens, std::size_t cap,
                                       Discipline order) {
  std::unordered_set<PackedVector> seen{v};
  std::deque<PackedVector> work{v};
  while (!work.empty()) {
    PackedVector cur;
    if (order == Discipline::breadth_first) {
      cur = work.front();
      work.pop_front();
    } else {
      cur = work.back();
      work.pop_back();
    }
    for (const auto& g : gens) {
      const PackedVector w = g.apply(cur);
      if (seen.insert(w).second) {
        if (seen.size() > cap) throw std::length_error("orbit: more than " + std::to_string(cap) + " elements");
        work.push_back(w);
      }
    }
  }
  return seen;
}

std::uint64_t sphere_count(std::uint32_t q, std::uint32_t rho) {
  // <v,v> = 2 (v1 v8 + v2 v7 + v3 v6 + v4 v5); on V0, v4 = v5. Count the pairs
  // (a, b) with a b = c for each c, then convolve.
  std::vector<std::uint64_t> prod(q, 0);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) ++prod[a * b % q];
  std::vector<std::uint64_t> acc(q, 0);
  for (std::uint32_t t = 0; t < q; ++t) ++acc[t * t % q];
  for (int k = 0; k < 3; ++k) {
    std::vector<std::uint64_t> next(q, 0);
    for (std::uint32_t s = 0; s < q; ++s)
      for (std::uint32_t c = 0; c < q; ++c) next[(s + c) % q] += acc[s] * prod[c];
    acc = std::move(next);
  }
  return acc[rho % q];
}

VerificationReport double_coset_check(std::uint32_t q, std::uint32_t rho) {
  require_field(q);
  if (rho % q == 0) throw std::invalid_argument("double_coset_check: rho must be a unit mod q");
  VerificationReport rep("orbits");
  rep.set_parameter("q", std::to_string(q));
  rep.set_parameter("rho", std::to_string(rho));
  const bool square = is_square_mod(rho, q);
  rep.set_parameter("rho_is_square", square ? "true" : "false");
  rep.info("scope", "finite-field analogue over F_q of the two-element double coset; evidence, not a proof");

  const auto full = group_generators(q, GeneratorSet::full);
  const auto para = group_generators(q, GeneratorSet::parabolic);
  const Fp one(1, q);
  const auto& form = TrilinearForm::standard();
  bool preserve = true;
  for (const auto& g : full) {
    const auto& m = g.matrix();
    preserve = preserve && preserves_bilinear_form(m) && !form.first_invariance_failure(m) &&
               m * v0(one) == v0(one);
  }
  rep.check(preserve, "generators preserve <,>, T and v0",
            std::to_string(full.size()) + " generators of G2(F_q), " + std::to_string(para.size()) +
                " of P(F_q)");
  bool para_in_p = true;
  for (const auto& g : para) para_in_p = para_in_p && in_parabolic(g.matrix());
  rep.check(para_in_p, "parabolic generators lie in P");

  const std::uint32_t r = rho % q;
  const PackedVector start = pack({0, 0, 1, 0, 0, r, 0, 0});
  const auto orb = orbit(start, full);
  const auto orb_dfs = orbit(start, full, 10'000'000, Discipline::depth_first);
  rep.check(orb == orb_dfs, "orbit is independent of the visiting order", "breadth-first vs depth-first");

  // Containment in the norm-2 rho sphere of V0.
  bool on_sphere = true;
  for (PackedVector v : orb) {
    const auto x = unpack(v);
    std::uint64_t s = 0;
    for (int i = 0; i < 8; ++i) s += static_cast<std::uint64_t>(x[i]) * x[7 - i];
    on_sphere = on_sphere && x[3] == x[4] && s % q == (2 * r) % q;
  }
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  const std::uint64_t predicted = square ? q3 * (q3 + 1) : q3 * (q3 - 1);
  const auto sphere = sphere_count(q, r);
  rep.check(on_sphere, "orbit of v_rho lies in V0 and has norm 2 rho", std::to_string(orb.size()) + " vectors");
  rep.check(orb.size() == predicted, "orbit size equals q^3 (q^3 " + std::string(square ? "+" : "-") + " 1)",
            "observed " + std::to_string(orb.size()) + ", predicted " + std::to_string(predicted));
  rep.info("sphere comparison", "norm-2 rho sphere of V0 has " + std::to_string(sphere) + " vectors; orbit " +
                                    (sphere == orb.size() ? "equals" : "is a proper subset of") + " it");

  // Parabolic orbits.
  std::vector<PackedVector> zero_part, nonzero_part;
  for (PackedVector v : orb) (v3_block_zero(v) ? zero_part : nonzero_part).push_back(v);
  std::sort(zero_part.begin(), zero_part.end());
  std::sort(nonzero_part.begin(), nonzero_part.end());

  bool separated = true;
  for (PackedVector v : orb)
    for (const auto& g : para) separated = separated && v3_block_zero(g.apply(v)) == v3_block_zero(v);
  rep.check(separated, "every parabolic generator preserves the v3 = 0 / v3 != 0 partition");

  std::unordered_set<PackedVector> covered;
  std::vector<std::size_t> sizes;
  std::vector<PackedVector> sorted(orb.begin(), orb.end());
  std::sort(sorted.begin(), sorted.end());
  for (PackedVector v : sorted) {
    if (covered.count(v)) continue;
    const auto p_orbit = orbit(v, para);
    sizes.push_back(p_orbit.size());
    covered.insert(p_orbit.begin(), p_orbit.end());
  }
  std::string census = std::to_string(zero_part.size()) + " with v3 = 0, " + std::to_string(nonzero_part.size()) +
                       " with v3 != 0; P-orbit sizes:";
  for (auto s : sizes) census += " " + std::to_string(s);
  rep.check(sizes.size() == 2, "exactly two P(F_q)-orbits", census);

  const auto p_of_start = orbit(start, para);
  rep.check(p_of_start.size() == zero_part.size() &&
                std::all_of(zero_part.begin(), zero_part.end(), [&](PackedVector v) { return p_of_start.count(v) > 0; }),
            "the v3 = 0 part is the P-orbit of v_rho (identity representative)");
  const auto w2 = FpMatrix(weyl_rep(kAlpha2, one));
  const PackedVector w2v = w2.apply(start);
  const auto p_of_w2 = orbit(w2v, para);
  rep.check(!v3_block_zero(w2v) && p_of_w2.size() == nonzero_part.size(),
            "the v3 != 0 part is the P-orbit of w2 v_rho");
  return rep;
}

}  // namespace g2l
