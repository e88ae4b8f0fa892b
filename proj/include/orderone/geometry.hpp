#pragma once

// Geometric decompositions of the order-one classes: the multiplicity f in
// A over the algebraic closure ~ B^f, and geometric isogenies between classes.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "orderone/int_poly.hpp"
#include "orderone/weil.hpp"

namespace orderone {

// The closed-form case split; "power of 2" means 2^m with m >= 1.
std::uint64_t f_from_formula(std::uint64_t n);

// Divisors of lcm(2520, 2 n1, 2 n2).
std::vector<std::uint64_t> default_m_set(std::uint64_t n1, std::uint64_t n2 = 1);

struct MultiplicityResult {
  std::uint64_t f = 0;  // 0 when the degree ratio is not an integer
  std::uint64_t stabilizing_m = 1;
  int degree = 0;            // deg Q0
  int radical_degree = 0;    // deg radical(Q0_m) at the stabilizing m
  int e_base = 1;            // Honda-Tate exponent over F_q
  int e_extension = 1;       // Honda-Tate exponent of the radical at m
  bool integral = true;
};

// f = max over m of e_base deg Q0 / (e_m deg radical(Q0_m)), where Q0_m has
// the m-th powers of the roots of Q0 as roots and e_m is the Honda-Tate
// exponent of that radical over F_{q^m}. m_set must be closed under divisors
// (the maximum is then attained at its lcm). Q0 must be squarefree and monic.
MultiplicityResult f_oracle(const IntPoly& q0, const std::vector<std::uint64_t>& m_set, int e_base = 1,
                            const WeilContext& ctx = WeilContext{});

struct SimpleFactor {
  IntPoly real_weil;
  IntPoly weil;  // of the simple class, = q0^e
  IntPoly q0;
  int e = 1;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

// Distinct simple isogeny factors of A_n over F_2.
std::vector<SimpleFactor> distinct_simple_factors(std::uint64_t n);

// Some Frobenius eigenvalues of the two factors agree after raising to an
// m-th power, m in m_set.
bool geom_isogenous(const SimpleFactor& a, const SimpleFactor& b, const std::vector<std::uint64_t>& m_set);
// Over all pairs of simple factors; an empty m_set means default_m_set(n1, n2).
bool geom_isogenous(std::uint64_t n1, std::uint64_t n2, std::vector<std::uint64_t> m_set = {});

// Unordered pairs {n1, n2} with n1 != n2 <= max_n that are geometrically
// isogenous, plus singletons {n} when two distinct factors of A_n are.
std::set<std::set<std::uint64_t>> geometric_isogeny_pairs(std::uint64_t max_n, unsigned workers = 0);

struct DecompositionReport {
  std::uint64_t n = 0;
  IntPoly simple_factor;  // real Weil polynomial
  IntPoly weil;
  int dimension = 0;
  std::uint64_t f_formula = 0;
  std::uint64_t f_oracle = 0;
  std::uint64_t stabilizing_m = 1;
  bool geom_simple = false;
  bool ordinary = false;
  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

// One report per distinct simple factor; an empty m_set means default_m_set(n).
std::vector<DecompositionReport> decompose(std::uint64_t n, std::vector<std::uint64_t> m_set = {});
// decompose(n) for n = 1..max_n, computed in parallel.
std::vector<DecompositionReport> decompose_range(std::uint64_t max_n, unsigned workers = 0);

// Never both ordinary and geometrically simple; for dimension >= 3 exactly one.
bool ordinary_xor_geom_simple(const DecompositionReport& report);
bool ordinary_xor_geom_simple(std::uint64_t n);

}  // namespace orderone
