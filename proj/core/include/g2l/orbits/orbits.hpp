#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "g2l/algebra/matrix.hpp"
#include "g2l/orbits/finite_field.hpp"
#include "g2l/report.hpp"

namespace g2l {

/// 8-vector over F_p (p < 256) packed one byte per coordinate, coordinate i in byte i.
using PackedVector = std::uint64_t;

PackedVector pack(const std::array<std::uint32_t, 8>& v);
std::array<std::uint32_t, 8> unpack(PackedVector v);

/// 8x8 matrix over F_p for fast action on packed vectors.
class FpMatrix {
 public:
  FpMatrix(const Matrix<Fp>& m);  // NOLINT(google-explicit-constructor)

  std::uint32_t modulus() const { return p_; }
  PackedVector apply(PackedVector v) const;
  const Matrix<Fp>& matrix() const { return m_; }

 private:
  Matrix<Fp> m_;
  std::array<std::uint32_t, 64> a_{};
  std::uint32_t p_;
};

enum class GeneratorSet { full, parabolic };

/// full: x_r(t) for all 12 roots and t in F_q^x, and h_r(t) = n_r(t) n_r(-1) for the
/// positive roots; parabolic: the same restricted to the positive roots, -alpha1
/// and the torus. Throws std::invalid_argument unless q is a prime >= 5 and < 256.
std::vector<FpMatrix> group_generators(std::uint32_t q, GeneratorSet which);

enum class Discipline { breadth_first, depth_first };

/// Closure of {v} under the generators. Throws std::length_error past `cap` elements.
std::unordered_set<PackedVector> orbit(PackedVector v, const std::vector<FpMatrix>& gens,
                                       std::size_t cap = 10'000'000,
                                       Discipline order = Discipline::breadth_first);

/// Number of v in V0 (v4 = v5) with <v,v> = 2 rho over F_q, by enumeration.
std::uint64_t sphere_count(std::uint32_t q, std::uint32_t rho);

/// The v3 block (coordinates 7 and 8) vanishes.
inline bool v3_block_zero(PackedVector v) { return (v >> 48) == 0; }

/// Finite-field analogue of the two-element double coset P \ G2 / SU(2,1):
/// the G2(F_q)-orbit of v_rho, its containment in the norm-2 rho sphere of V0,
/// and its decomposition into parabolic orbits.
VerificationReport double_coset_check(std::uint32_t q, std::uint32_t rho);

}  // namespace g2l
