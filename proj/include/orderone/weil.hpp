#pragma once

// Weil polynomials over F_q: the real/Weil transform, Newton polygons,
// base extension and the small predicates built on them.

#include <cstdint>
#include <optional>
#include <vector>

#include "orderone/arith.hpp"
#include "orderone/int_poly.hpp"

namespace orderone {

struct WeilContext {
  std::uint64_t p = 2;
  unsigned a = 1;

  Integer q() const { return ipow(Integer(static_cast<unsigned long>(p)), a); }
  // Splits q into p^a; throws InvalidInput if q is not a prime power.
  static WeilContext from_q(std::uint64_t q);
};

struct NewtonSegment {
  Rational slope;  // common valuation of the roots on this segment, v_q(q) = 1
  int multiplicity = 0;
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

// Segments in increasing slope order.
struct NewtonPolygon {
  std::vector<NewtonSegment> segments;
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& f);

  const std::vector<IntPoly>& polys() const { return seq_; }
  int variations_at(const Integer& x) const;
  // At x = scale * sqrt(d).
  int variations_at_surd(const Integer& scale, const Integer& d) const;
  // At +infinity (positive = true) or -infinity.
  int variations_at_infinity(bool positive) const;
  int count_real_roots() const;

 private:
  std::vector<IntPoly> seq_;
};

int sign_variations(const std::vector<int>& signs);

// x^deg R * R(x + q/x).
IntPoly real_to_weil(const IntPoly& r, const WeilContext& ctx);

// All roots real and inside [-2 sqrt q, 2 sqrt q].
bool is_real_weil(const IntPoly& r, const WeilContext& ctx);

// Lower convex hull of (i, v_p(a_i) / a); slopes are reported as root
// valuations. Rejects polynomials vanishing at 0.
NewtonPolygon newton_polygon(const IntPoly& f, const WeilContext& ctx);
bool is_ordinary(const IntPoly& f, const WeilContext& ctx);

// Monic polynomial whose roots are the n-th powers of the roots of Q.
IntPoly base_extension(const IntPoly& q_poly, std::uint64_t n);
// Res_y(Q(y), y^n - x), normalized monic.
IntPoly base_extension_resultant(const IntPoly& q_poly, std::uint64_t n);
// Power sums p_{kn} of Q turned back into coefficients.
IntPoly base_extension_power_sums(const IntPoly& q_poly, std::uint64_t n);

// Power sums p_1..p_count of the roots of a monic polynomial.
std::vector<Integer> power_sums(const IntPoly& monic, std::size_t count);
// Monic polynomial of degree sums.size() with the given power sums.
IntPoly from_power_sums(const std::vector<Integer>& sums);

// +1 or -1 when Q(x) = sign * q^-g x^2g Q(q/x), nullopt otherwise.
std::optional<int> functional_equation_sign(const IntPoly& q_poly, const WeilContext& ctx);

// No two roots have a ratio that is a nontrivial root of unity of order
// dividing any m in orders (tested through radical degrees).
bool ratio_root_of_unity_free(const IntPoly& q_poly, const std::vector<std::uint64_t>& orders);

// g > 2 and the polygon is exactly {1/g: g, 1 - 1/g: g}.
bool np_forces_geom_simple(const IntPoly& f, const WeilContext& ctx);

// Over F_p: Q is the Weil polynomial of its simple class unless Q = x^2 - p.
bool hondatate_irreducibility_over_Fp(const IntPoly& q_poly, const WeilContext& ctx);

// A place of Q[x]/(h) above p: root valuation normalized by v(q) = 1 and the
// local degree.
struct LocalPlace {
  Rational slope;
  int degree = 0;
  friend bool operator==(const LocalPlace&, const LocalPlace&) = default;
};

// Places above p, from the p-adic factorization of h (monic, squarefree,
// h(0) != 0); nullopt when a residue field gets too large to search.
std::optional<std::vector<LocalPlace>> places_above_p(const IntPoly& h, const WeilContext& ctx);

// Exponent e with the simple class of an irreducible q-Weil polynomial h
// having Weil polynomial h^e: the lcm of denominators of the local invariants
// (1/2 at real places). nullopt when places_above_p does.
std::optional<int> honda_tate_exponent(const IntPoly& h, const WeilContext& ctx);

// Necessary condition only: the smallest e for which every Newton polygon
// segment of h^e has integral height, times 2 with a real root.
int honda_tate_exponent_lower_bound(const IntPoly& h, const WeilContext& ctx);

}  // namespace orderone
