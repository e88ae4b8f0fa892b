#include "orderone/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "orderone/arith.hpp"
#include "orderone/errors.hpp"
#include "orderone/madan_pal.hpp"

namespace orderone {
namespace {

RootOfUnity z(std::int64_t k, std::int64_t n) { return RootOfUnity(k, n); }

// The printed relations as value lists.
std::vector<std::vector<RootOfUnity>> printed_small_relations() {
  const RootOfUnity one = RootOfUnity::one();
  auto m = [](RootOfUnity a, RootOfUnity b) { return -(a * b); };
  return {
      {one, RootOfUnity::minus_one()},
      {one, z(1, 3), z(2, 3)},
      {one, z(1, 5), z(2, 5), z(3, 5), z(4, 5)},
      {z(1, 5), z(2, 5), z(3, 5), z(4, 5), -z(1, 3), -z(2, 3)},
      {one, z(1, 7), z(2, 7), z(3, 7), z(4, 7), z(5, 7), z(6, 7)},
      {one, z(2, 5), z(3, 5), m(z(1, 3), z(1, 5)), m(z(2, 3), z(1, 5)), m(z(1, 3), z(4, 5)), m(z(2, 3), z(4, 5))},
      {one, z(1, 5), z(4, 5), m(z(1, 3), z(2, 5)), m(z(2, 3), z(2, 5)), m(z(1, 3), z(3, 5)), m(z(2, 3), z(3, 5))},
      {z(2, 5), z(3, 5), -z(1, 3), -z(2, 3), m(z(1, 3), z(1, 5)), m(z(2, 3), z(1, 5)), m(z(1, 3), z(4, 5)),
       m(z(2, 3), z(4, 5))},
      {z(1, 5), z(4, 5), -z(1, 3), -z(2, 3), m(z(1, 3), z(2, 5)), m(z(2, 3), z(2, 5)), m(z(1, 3), z(3, 5)),
       m(z(2, 3), z(3, 5))},
      {z(1, 7), z(2, 7), z(3, 7), z(4, 7), z(5, 7), z(6, 7), -z(1, 3), -z(2, 3)},
  };
}

std::string orders_string(const SolutionTriple& t) { return t.to_string(); }

bool explicit_parametric(const SolutionTriple& s) {
  return (s.eta[0] == s.eta[1] && s.eta[2] == -s.eta[0]) || (s.eta[1] == s.eta[0].inverse() && s.eta[2].is_one());
}

std::string pair_string(const std::set<std::uint64_t>& p) {
  std::string out = "{";
  for (auto v : p) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

}  // namespace

std::vector<RelationClass> published_small_relations(int max_weight) {
  std::vector<RelationClass> out;
  for (const auto& values : printed_small_relations()) {
    if (static_cast<int>(values.size()) > max_weight) continue;
    const Relation r = canonicalize(relation_from_values(values));
    out.push_back({r, type_label(r)});
  }
  std::sort(out.begin(), out.end(), [](const RelationClass& a, const RelationClass& b) {
    if (a.representative.weight() != b.representative.weight()) {
      return a.representative.weight() < b.representative.weight();
    }
    return a.representative < b.representative;
  });
  return out;
}

CheckResult check_small_relations(const std::vector<RelationClass>& classes, int max_weight) {
  CheckResult res;
  const auto expected = published_small_relations(max_weight);
  if (classes.size() != expected.size()) {
    res.fail("found " + std::to_string(classes.size()) + " classes, expected " + std::to_string(expected.size()));
    return res;
  }
  std::set<Relation> want;
  for (const auto& c : expected) want.insert(c.representative);
  for (const auto& c : classes) {
    if (!want.count(canonicalize(c.representative))) res.fail("unexpected class " + c.type_label);
  }
  if (res.ok) res.detail = std::to_string(classes.size()) + " classes match";
  return res;
}

std::set<SolutionTriple> parametric_orbit_in_bounds(const SolveOptions& options) {
  std::set<SolutionTriple> out;
  for (std::int64_t n = 1; n <= options.max_order_12; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      const RootOfUnity zeta(k, n);
      for (const SolutionTriple t : {SolutionTriple{{zeta, zeta, -zeta}}, SolutionTriple{{zeta, zeta.inverse(), RootOfUnity::one()}}}) {
        if (in_bounds(t, options)) out.insert(t);
      }
    }
  }
  return out;
}

Table2Report verify_table2(const SolveOptions& options) { return verify_table2(options, solve_bounded(options)); }

Table2Report verify_table2(const SolveOptions& options, std::vector<SolutionTriple> solutions) {
  Table2Report rep;
  rep.solutions = std::move(solutions);
  rep.patterns = classify_solutions(rep.solutions);
  std::vector<SolutionPattern> sporadic;
  for (const auto& p : rep.patterns) {
    if (p.kind == PatternKind::kSporadic) sporadic.push_back(p);
  }
  if (sporadic != published_sporadic_patterns()) {
    rep.sporadic.fail("sporadic signatures differ from the published table (" + std::to_string(sporadic.size()) +
                      " rows found)");
  } else {
    rep.sporadic.detail = std::to_string(sporadic.size()) + " sporadic rows match";
  }
  std::set<SolutionTriple> parametric;
  for (const auto& s : rep.solutions) {
    if (is_parametric(s) != explicit_parametric(s)) rep.parametric.fail("family test disagrees at " + orders_string(s));
    if (is_parametric(s)) {
      parametric.insert(s);
    } else if (!sporadic_conductor_ok(s)) {
      rep.parametric.fail("sporadic solution with bad conductor " + orders_string(s));
    }
  }
  const auto orbit = parametric_orbit_in_bounds(options);
  if (parametric != orbit) {
    rep.parametric.fail("parametric solutions (" + std::to_string(parametric.size()) + ") differ from the orbit (" +
                        std::to_string(orbit.size()) + ")");
  }
  if (rep.parametric.ok) rep.parametric.detail = std::to_string(parametric.size()) + " parametric triples";
  return rep;
}

CheckResult check_theorem(const std::vector<DecompositionReport>& reports) {
  CheckResult res;
  for (const auto& r : reports) {
    if (r.f_oracle != r.f_formula) {
      res.fail("n = " + std::to_string(r.n) + ": oracle f = " + std::to_string(r.f_oracle) + ", formula f = " +
               std::to_string(r.f_formula));
    }
  }
  if (res.ok) res.detail = std::to_string(reports.size()) + " simple factors agree";
  return res;
}

const std::set<std::set<std::uint64_t>>& published_isogeny_pairs() {
  static const std::set<std::set<std::uint64_t>> pairs{{1, 2}, {1, 4}, {2, 4}, {3, 30}, {6, 7}, {7}, {30}};
  return pairs;
}

CheckResult check_isogeny_pairs(const std::set<std::set<std::uint64_t>>& pairs) {
  CheckResult res;
  for (const auto& p : pairs) {
    if (!published_isogeny_pairs().count(p)) res.fail("unexpected pair " + pair_string(p));
  }
  for (const auto& p : published_isogeny_pairs()) {
    if (!pairs.count(p)) res.fail("missing pair " + pair_string(p));
  }
  if (res.ok) res.detail = std::to_string(pairs.size()) + " pairs match";
  return res;
}

CheckResult check_polynomial_lemmas(std::uint64_t max_n) {
  CheckResult res;
  for (unsigned m = 2; (std::uint64_t{1} << m) <= max_n; ++m) {
    if (!pn_at_one_check(m)) res.fail("P_n(1) fails at n = " + std::to_string(1u << m));
  }
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (!newton_lemma_check(n)) res.fail("Newton polygon lemma fails at n = " + std::to_string(n));
    const MadanPalRecord rec = build_record(n);
    if (rec.weil(Integer(1)) != 1) res.fail("A_n has order != 1 at n = " + std::to_string(n));
  }
  for (std::uint64_t n : {2u, 7u, 30u}) {
    IntPoly prod = IntPoly::constant(1);
    for (const auto& f : simple_factor_list(n)) prod *= f;
    if (prod != madan_pal_poly(n)) res.fail("printed factorization of P_" + std::to_string(n) + " fails");
  }
  if (res.ok) res.detail = "n <= " + std::to_string(max_n);
  return res;
}

CheckResult check_resultant_identities(std::uint64_t max_n) {
  CheckResult res;
  for (std::uint64_t n = 3; n <= max_n; ++n) {
    if (!eigenvalue_resultant_identity(n)) res.fail("eigenvalue resultant identity fails at n = " + std::to_string(n));
  }
  if (!ratio_resultant_identity()) res.fail("ratio resultant is not a unit multiple of g");
  if (res.ok) res.detail = "3 <= n <= " + std::to_string(max_n) + " and the ratio resultant";
  return res;
}

std::vector<Relation> mod2_corpus(std::size_t count, std::uint64_t seed, std::size_t max_weight) {
  if (max_weight < 2) throw InvalidInput("max_weight must be at least 2");
  std::mt19937_64 rng(seed);
  const auto parts = printed_small_relations();
  constexpr std::int64_t kRotationLevel = 420;
  std::vector<Relation> out;
  while (out.size() < count) {
    std::vector<RootOfUnity> values;
    const std::size_t target = 2 + rng() % (max_weight - 1);
    for (int attempt = 0; attempt < 8 && values.size() < target; ++attempt) {
      const auto& part = parts[rng() % parts.size()];
      const RootOfUnity zeta(static_cast<std::int64_t>(rng() % kRotationLevel), kRotationLevel);
      std::vector<RootOfUnity> rotated;
      for (const auto& v : part) rotated.push_back(v * zeta);
      std::vector<RootOfUnity> conj;
      for (const auto& v : rotated) conj.push_back(v.inverse());
      std::vector<RootOfUnity> a = rotated, b = conj;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      // A self-conjugate rotation is added once, otherwise with its conjugate.
      std::vector<RootOfUnity> piece = rotated;
      if (a != b) piece.insert(piece.end(), conj.begin(), conj.end());
      if (values.size() + piece.size() > max_weight) continue;
      values.insert(values.end(), piece.begin(), piece.end());
    }
    if (values.size() < 2) continue;
    for (auto& v : values) {
      if (rng() % 2) v = -v;
    }
    out.push_back(relation_from_values(values));
  }
  return out;
}

CheckResult check_mod2_corpus(const std::vector<Relation>& corpus) {
  CheckResult res;
  std::size_t parts_checked = 0;
  for (const auto& r : corpus) {
    const std::string tag = " (weight " + std::to_string(r.weight()) + ")";
    if (!is_mod2_relation(r) || !is_conjugation_stable(r, true)) {
      res.fail("corpus member is not a conjugation-stable mod-2 relation" + tag);
      continue;
    }
    const auto lift = lift_mod2(r);
    if (!lift || !is_relation(*lift)) res.fail("no lift" + tag);
    const auto parts = conjugation_stable_partition(r, true);
    std::string why;
    if (!verify_conjugation_stable_partition(r, parts, true, &why)) res.fail("partition: " + why + tag);
    for (const auto& part : parts) {
      ++parts_checked;
      if (!lift_is_unique(part)) res.fail("indecomposable part with several lifts" + tag);
    }
  }
  if (res.ok) {
    res.detail = std::to_string(corpus.size()) + " relations, " + std::to_string(parts_checked) + " parts";
  }
  return res;
}

CheckResult check_ordinary_xor(const std::vector<DecompositionReport>& reports) {
  CheckResult res;
  std::size_t checked = 0;
  for (const auto& r : reports) {
    if (r.dimension < 3) continue;
    ++checked;
    if (!ordinary_xor_geom_simple(r)) res.fail("n = " + std::to_string(r.n) + " is not ordinary xor geometrically simple");
  }
  if (res.ok) res.detail = std::to_string(checked) + " factors of dimension >= 3";
  return res;
}

}  // namespace orderone
