// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "orderone/geometry.hpp"
#include "orderone/relations.hpp"
#include "orderone/unity_solver.hpp"
#include "orderone/verify.hpp"

namespace orderone {
namespace {

constexpr std::size_t kCorpusSize = 1000;
constexpr std::uint64_t kCorpusSeed = 20240611;
constexpr std::size_t kCorpusMaxWeight = 18;

CheckResult criterion_table1() { return check_small_relations(enumerate_indecomposable(8)); }

CheckResult criterion_orbit_count() {
  CheckResult res;
  const auto reps = orbit_representatives();
  if (reps.size() != 16) res.fail("found " + std::to_string(reps.size()) + " components, expected 16");
  else res.detail = "16 components";
  return res;
}

CheckResult criterion_table2() {
  const Table2Report rep = verify_table2(kTable2Bounds);
  CheckResult res;
  if (!rep.sporadic.ok) res.fail(rep.sporadic.detail);
  if (!rep.parametric.ok) res.fail(rep.parametric.detail);
  if (res.ok) res.detail = rep.sporadic.detail + "; " + rep.parametric.detail;
  return res;
}

const std::vector<DecompositionReport>& reports_to_32() {
  static const auto reports = decompose_range(32);
  return reports;
}

CheckResult criterion_theorem() { return check_theorem(reports_to_32()); }

CheckResult criterion_pairs() { return check_isogeny_pairs(geometric_isogeny_pairs(30)); }

CheckResult criterion_lemmas() { return check_polynomial_lemmas(64); }

CheckResult criterion_resultants() { return check_resultant_identities(30); }

CheckResult criterion_mod2() {
  return check_mod2_corpus(mod2_corpus(kCorpusSize, kCorpusSeed, kCorpusMaxWeight));
}

CheckResult criterion_ordinary_xor() { return check_ordinary_xor(reports_to_32()); }

int run() {
  const std::vector<std::pair<std::string, std::function<CheckResult()>>> criteria{
      {"indecomposable relations of weight <= 8", criterion_table1},
      {"orbit representatives", criterion_orbit_count},
      {"solution signatures in (32, 32, 120)", criterion_table2},
      {"geometric multiplicity for n <= 32", criterion_theorem},
      {"geometric isogeny pairs for n <= 30", criterion_pairs},
      {"polynomial lemmas for n <= 64", criterion_lemmas},
      {"resultant identities", criterion_resultants},
      {"mod-2 relation corpus", criterion_mod2},
      {"ordinary xor geometrically simple for n <= 32", criterion_ordinary_xor},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s [%.1fs]\n", res.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                res.detail.c_str(), secs);
    std::fflush(stdout);
    if (!res.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace orderone

int main() { return orderone::run(); }
