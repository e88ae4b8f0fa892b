#pragma once

// The equation g(z1, z2, z3) = 0 in roots of unity: its symmetry group, the
// candidate reduction, and a bounded exhaustive search for its solutions.

#include <array>
#include <compare>
#include <optional>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "orderone/laurent.hpp"
#include "orderone/relations.hpp"

namespace orderone {

// g with its 14 monomials; u = -z1 z2 z3^-2.
const LaurentExpr& g_expr();
const LaurentExpr& u_expr();
// The 12 signed monomials of g with coefficient +-1, in inverse pairs.
const std::vector<LaurentExpr>& s_set();

struct SolutionTriple {
  std::array<RootOfUnity, 3> eta;

  std::array<std::int64_t, 3> orders() const {
    return {eta[0].order(), eta[1].order(), eta[2].order()};
  }
  std::int64_t level() const;
  std::string to_string() const;

  friend auto operator<=>(const SolutionTriple&, const SolutionTriple&) = default;
  friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
};

CycInt eval_g(const SolutionTriple& t);

// z_i -> sign_i * z1^m[i][0] z2^m[i][1] z3^m[i][2].
struct SymmetryElement {
  std::array<std::array<int, 3>, 3> m{};
  std::array<int, 3> sign{1, 1, 1};
  // Generator indices, applied right to left.
  std::vector<int> word;

  static SymmetryElement identity();
  // 0: inversion, 1: swap z1 and z2, 2: (z1, z2^-1, -z1/z3).
  static SymmetryElement generator(int index);

  friend bool operator==(const SymmetryElement& a, const SymmetryElement& b) {
    return a.m == b.m && a.sign == b.sign;
  }
};

// a after b.
SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b);
LaurentExpr apply_symmetry(const SymmetryElement& s, const LaurentExpr& e);
SolutionTriple apply_symmetry(const SymmetryElement& s, const SolutionTriple& t);

// Closure of the three generators; finite.
const std::vector<SymmetryElement>& symmetry_group();

// Forms mu +- 1 (28) and u + u^-1 + sum over inversion-stable T, #T <= 6 (42).
std::vector<LaurentExpr> candidate_h_set();

struct OrbitComponent {
  LaurentExpr representative;  // minimal member
  std::vector<LaurentExpr> members;
};

// Components of the candidate graph (generator edges plus h -- g - h).
std::vector<OrbitComponent> orbit_components();
std::vector<LaurentExpr> orbit_representatives();

struct SolveOptions {
  std::int64_t max_order_12 = 1;
  std::int64_t max_order_3 = 1;
  std::int64_t max_level = 1;
  // Skip levels L with phi(L) > max_phi; 0 searches everything.
  std::uint64_t max_phi = 0;
  unsigned workers = 0;  // 0: hardware concurrency
};

inline constexpr std::int64_t kMaxSolveLevel = 5040;

// Every triple inside the bounds with g = 0, sorted.
std::vector<SolutionTriple> solve_bounded(const SolveOptions& options);

bool in_bounds(const SolutionTriple& t, const SolveOptions& options);

// In the G-orbit of some (zeta, zeta, -zeta).
bool is_parametric(const SolutionTriple& t);

enum class PatternKind { kParametric, kSporadic };
std::string to_string(PatternKind kind);

struct SolutionPattern {
  std::int64_t order1 = 0;
  std::int64_t order2 = 0;
  std::set<std::int64_t> orders3;
  PatternKind kind = PatternKind::kSporadic;
  friend bool operator==(const SolutionPattern&, const SolutionPattern&) = default;
};

// Grouped by kind and (order1 <= order2).
std::vector<SolutionPattern> classify_solutions(const std::vector<SolutionTriple>& sols);

// The published sporadic order signatures.
const std::vector<SolutionPattern>& published_sporadic_patterns();

// Conductor check: the lcm of the orders divides 24, 30 or 42.
bool sporadic_conductor_ok(const SolutionTriple& t);

// The weight-16 relation at t: the 12 unit terms, then u, u, u^-1, u^-1.
std::vector<RootOfUnity> g_relation_values(const SolutionTriple& t);
Relation g_relation_at(const SolutionTriple& t);

// A conjugation-stable partition of the weight-16 relation in which the two
// copies of u(t) can be put in different parts. Parts are written to *parts.
bool u_terms_split(const SolutionTriple& t, std::vector<Relation>* parts = nullptr);

// The resultant eliminating alpha from the two eigenvalue quadratics is
// c * monomial * g for a nonzero integer c; here c = -2 and the monomial is
// z1 z2^-1 z3^2.
struct RatioIdentity {
  Integer constant;
  Exponent3 exponent{};
};
std::optional<RatioIdentity> ratio_resultant_factor();
bool ratio_resultant_identity();
LaurentExpr ratio_resultant();

}  // namespace orderone
