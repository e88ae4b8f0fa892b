#pragma once

// Degrees and root valuations of the irreducible factors of an integer
// polynomial over Q_p, computed with MacLane's inductive valuations (key
// polynomials, higher-order Newton polygons and residual polynomials).

#include <cstdint>
#include <optional>
#include <vector>

#include "orderone/arith.hpp"
#include "orderone/int_poly.hpp"

namespace orderone {

struct PadicFactor {
  Rational valuation;  // common valuation of the roots, v(p) = 1
  int degree = 0;
  friend bool operator==(const PadicFactor&, const PadicFactor&) = default;
};

// Upper bound on the residue field sizes searched exhaustively.
inline constexpr std::uint64_t kMaxResidueFieldSize = std::uint64_t{1} << 20;

// Factors sorted by (valuation, degree). h must be monic, squarefree and not
// divisible by x. nullopt when a residue field would exceed
// kMaxResidueFieldSize.
std::optional<std::vector<PadicFactor>> padic_factor_degrees(const IntPoly& h, std::uint64_t p);

}  // namespace orderone
