#include "orderone/verify.hpp"

#include <gtest/gtest.h>

#include "reference_data.hpp"

namespace orderone {
namespace {

TEST(Verify, PublishedRelationsMatchReference) {
  std::set<Relation> expected;
  for (const auto& [label, values] : testing::small_relations_table()) {
    expected.insert(canonicalize(relation_from_values(values)));
  }
  std::set<Relation> got;
  for (const auto& c : published_small_relations()) got.insert(c.representative);
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(check_small_relations(enumerate_indecomposable(8)).ok);
  EXPECT_FALSE(check_small_relations(enumerate_indecomposable(7)).ok);
  EXPECT_TRUE(check_small_relations(enumerate_indecomposable(7), 7).ok);
  EXPECT_EQ(published_small_relations(5).size(), 3u);
}

TEST(Verify, ParametricOrbit) {
  const SolveOptions opt{12, 12, 24, 0, 1};
  const auto orbit = parametric_orbit_in_bounds(opt);
  for (const auto& t : orbit) {
    EXPECT_TRUE(is_zero(eval_g(t))) << t.to_string();
    EXPECT_TRUE(is_parametric(t)) << t.to_string();
  }
  const auto rep = verify_table2(opt);
  EXPECT_TRUE(rep.parametric.ok) << rep.parametric.detail;
  // The small box misses most published rows.
  EXPECT_FALSE(rep.sporadic.ok);
}

TEST(Verify, IsogenyPairs) {
  EXPECT_TRUE(check_isogeny_pairs(published_isogeny_pairs()).ok);
  auto extra = published_isogeny_pairs();
  extra.insert({3, 5});
  EXPECT_FALSE(check_isogeny_pairs(extra).ok);
}

TEST(Verify, Mod2CorpusIsValid) {
  const auto corpus = mod2_corpus(60, 7, 18);
  ASSERT_EQ(corpus.size(), 60u);
  for (const auto& r : corpus) {
    EXPECT_LE(r.weight(), 18u);
    EXPECT_TRUE(is_mod2_relation(r));
    EXPECT_TRUE(is_conjugation_stable(r, true));
  }
  const auto res = check_mod2_corpus(corpus);
  EXPECT_TRUE(res.ok) << res.detail;
  EXPECT_EQ(mod2_corpus(60, 7, 18), corpus);
}

TEST(Verify, TheoremCheckReportsMismatch) {
  auto reports = decompose(7);
  EXPECT_TRUE(check_theorem(reports).ok);
  reports[0].f_oracle = 1;
  EXPECT_FALSE(check_theorem(reports).ok);
}

}  // namespace
}  // namespace orderone
