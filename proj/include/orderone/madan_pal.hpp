#pragma once

// The polynomials P_n and the order-one isogeny classes A_n over F_2 with
// real Weil polynomial P_n(3 - x).

#include <cstdint>
#include <vector>

#include "orderone/int_poly.hpp"
#include "orderone/weil.hpp"

namespace orderone {

inline const WeilContext kF2{2, 1};

struct MadanPalRecord {
  std::uint64_t n = 0;
  IntPoly p_n;
  IntPoly real_weil;
  IntPoly weil;
  // Real Weil polynomials of the simple factors, with multiplicity.
  std::vector<IntPoly> simple_factors;
  NewtonPolygon newton;
  bool ordinary = false;
  friend bool operator==(const MadanPalRecord&, const MadanPalRecord&) = default;
};

// prod over 0 <= k <= n/2, gcd(k, n) = 1 of x^2 - (4 + 2 cos(2 pi k / n)) x + 1.
IntPoly madan_pal_poly(std::uint64_t n);

// Irreducible factors of P_n with multiplicity: the printed factors for
// n = 2, 7, 30 (checked by multiplication), [P_n] otherwise.
std::vector<IntPoly> simple_factor_list(std::uint64_t n);

// Monic normalization of P(3 - x).
IntPoly shift_to_real_weil(const IntPoly& p);

// Memoized for n <= 64.
MadanPalRecord build_record(std::uint64_t n);

// P_{2^m}(1) == (-1)^(2^m / 4) * 2, m >= 2.
bool pn_at_one_check(unsigned m);

// P(3 - x), monic, is Eisenstein at 2.
bool is_eisenstein_at_two(const IntPoly& monic);

// Newton polygon of A_n against the closed-form description (ordinary for n
// not a power of 2; slopes 1/2^m, 1 - 1/2^m with m = max(1, log2 n - 1)
// otherwise, plus the Eisenstein property when n = 2^m, m >= 2).
bool newton_lemma_check(std::uint64_t n);

// Res_y(Phi_n(y), x^2 + (y - 1) x - 2y) equals the Weil polynomial of A_n up to
// sign; n >= 3.
bool eigenvalue_resultant_identity(std::uint64_t n);

}  // namespace orderone
