#pragma once

// Checks of the published results, shared by the command-line tool, the
// acceptance binary and the Python module.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "orderone/geometry.hpp"
#include "orderone/relations.hpp"
#include "orderone/unity_solver.hpp"

namespace orderone {

struct CheckResult {
  bool ok = true;
  std::string detail;  // first failure, or a short summary on success

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// The printed indecomposable relations of weight <= max_weight <= 8 (ten in
// all), canonicalized and sorted like enumerate_indecomposable.
std::vector<RelationClass> published_small_relations(int max_weight = 8);
CheckResult check_small_relations(const std::vector<RelationClass>& classes, int max_weight = 8);

inline constexpr SolveOptions kTable2Bounds{32, 32, 120, 0, 0};

struct Table2Report {
  std::vector<SolutionTriple> solutions;
  std::vector<SolutionPattern> patterns;
  CheckResult sporadic;    // sporadic signatures equal the published table
  CheckResult parametric;  // parametric solutions are exactly the explicit orbit in bounds
};
Table2Report verify_table2(const SolveOptions& options);
// Same checks on an already computed solve_bounded(options).
Table2Report verify_table2(const SolveOptions& options, std::vector<SolutionTriple> solutions);

// The orbit {(z, z, -z)} u {(z, z^-1, 1)} inside the bounds.
std::set<SolutionTriple> parametric_orbit_in_bounds(const SolveOptions& options);

CheckResult check_theorem(const std::vector<DecompositionReport>& reports);

const std::set<std::set<std::uint64_t>>& published_isogeny_pairs();
CheckResult check_isogeny_pairs(const std::set<std::set<std::uint64_t>>& pairs);

// P_{2^m}(1), the Newton-polygon lemma, the printed factorizations and the
// point count for every n <= max_n.
CheckResult check_polynomial_lemmas(std::uint64_t max_n);
// The two resultant identities, for 3 <= n <= max_n.
CheckResult check_resultant_identities(std::uint64_t max_n);

// Conjugation-stable mod-2 relations built from rotated printed relations and
// their conjugates with random signs; weights between 2 and max_weight.
std::vector<Relation> mod2_corpus(std::size_t count, std::uint64_t seed, std::size_t max_weight);
// Every member lifts, its conjugation-stable mod-2 partition satisfies the
// postconditions, and each part (indecomposable mod 2) has a unique lift.
CheckResult check_mod2_corpus(const std::vector<Relation>& corpus);

CheckResult check_ordinary_xor(const std::vector<DecompositionReport>& reports);

}  // namespace orderone
