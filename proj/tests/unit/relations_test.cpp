#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "orderone/errors.hpp"
#include "orderone/relations.hpp"
#include "reference_data.hpp"

namespace orderone {
namespace {

using testing::small_relations_table;
using testing::z;

Relation rel(std::vector<RootOfUnity> values) { return relation_from_values(values); }

TEST(Relations, Sums) {
  EXPECT_TRUE(is_relation(rel({RootOfUnity::one(), RootOfUnity::minus_one()})));
  EXPECT_TRUE(is_relation(rel({z(0, 1), z(1, 3), z(2, 3)})));
  EXPECT_FALSE(is_relation(rel({z(0, 1), z(1, 5)})));
  EXPECT_EQ(normalize_entry(z(1, 6)), (RelationEntry{z(2, 3), -1}));
  EXPECT_EQ(normalize_entry(z(1, 4)), (RelationEntry{z(1, 4), 1}));
}

TEST(Relations, TableEntriesAreIndecomposable) {
  for (const auto& [label, values] : small_relations_table()) {
    const Relation r = rel(values);
    EXPECT_TRUE(is_relation(r)) << label;
    EXPECT_TRUE(is_indecomposable(r, false)) << label;
    EXPECT_EQ(type_label(r), label);
  }
}

TEST(Relations, Decomposable) {
  Relation r = rel({z(0, 1), z(1, 3), z(2, 3), z(0, 1), z(1, 2)});
  EXPECT_FALSE(is_indecomposable(r, false));
  EXPECT_THROW(is_indecomposable(rel({z(0, 1)}), false), InvalidInput);
}

TEST(Relations, RotationInvariantCanonicalForm) {
  std::mt19937_64 rng(1);
  for (const auto& [label, values] : small_relations_table()) {
    const Relation r = rel(values);
    const Relation c = canonicalize(r);
    EXPECT_NE(std::find(c.entries.begin(), c.entries.end(), RelationEntry{RootOfUnity::one(), 1}),
              c.entries.end())
        << label;
    for (int t = 0; t < 5; ++t) {
      RootOfUnity zeta(static_cast<std::int64_t>(rng() % 420), 420);
      EXPECT_EQ(canonicalize(rotate(r, zeta)), c) << label;
    }
  }
}

TEST(Relations, EnumerationSmallWeights) {
  auto two = enumerate_indecomposable(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].type_label, "R2");
  auto five = enumerate_indecomposable(5);
  std::vector<std::string> labels;
  for (const auto& c : five) labels.push_back(c.type_label);
  EXPECT_EQ(labels, (std::vector<std::string>{"R2", "R3", "R5"}));
  EXPECT_THROW(enumerate_indecomposable(9), CapacityError);
}

TEST(Relations, EnumerationMatchesTable) {
  auto classes = enumerate_indecomposable(8);
  std::set<Relation> expected;
  for (const auto& [label, values] : small_relations_table()) expected.insert(canonicalize(rel(values)));
  std::set<Relation> got;
  for (const auto& c : classes) {
    got.insert(c.representative);
    // Elements are pairwise distinct.
    std::set<RelationEntry> distinct(c.representative.entries.begin(), c.representative.entries.end());
    EXPECT_EQ(distinct.size(), c.representative.weight());
  }
  EXPECT_EQ(classes.size(), 10u);
  EXPECT_EQ(got, expected);
}

TEST(Relations, Lifting) {
  auto l = lift_mod2(rel({z(0, 1), z(0, 1)}));
  ASSERT_TRUE(l.has_value());
  EXPECT_TRUE(is_relation(*l));
  EXPECT_EQ(l->entries[1].sign, -1);

  Relation r = rel({z(0, 1), z(1, 3), -z(2, 3)});
  EXPECT_TRUE(is_mod2_relation(r));
  EXPECT_FALSE(is_relation(r));
  auto lr = lift_mod2(r);
  ASSERT_TRUE(lr.has_value());
  EXPECT_TRUE(is_relation(*lr));

  EXPECT_TRUE(lift_is_unique(rel({z(0, 1), z(1, 2)})));
  EXPECT_FALSE(lift_is_unique(rel({z(0, 1), z(1, 2), z(1, 3), z(5, 6)})));
  for (const auto& [label, values] : small_relations_table()) {
    EXPECT_TRUE(lift_is_unique(rel(values))) << label;
    const std::int64_t level = mod2_level(rel(values));
    EXPECT_EQ(level % 2, 1) << label;
    for (std::int64_t d = 3; d * d <= level; d += 2) EXPECT_NE(level % (d * d), 0) << label;
  }
}

TEST(Relations, Mod2Indecomposable) {
  // 1 + 1 is even; so is 1 + zeta3 + zeta3^2.
  EXPECT_TRUE(is_indecomposable(rel({z(0, 1), z(0, 1)}), true));
  EXPECT_TRUE(is_indecomposable(rel({z(0, 1), z(1, 3), z(2, 3)}), true));
  EXPECT_FALSE(is_indecomposable(rel({z(0, 1), z(0, 1), z(1, 4), z(3, 4)}), true));
}

TEST(Relations, ConjugationStablePartition) {
  Relation r2 = rel({z(0, 1), z(1, 2)});
  auto p = conjugation_stable_partition(r2, false);
  ASSERT_EQ(p.size(), 1u);

  Relation mixed = rel({z(0, 1), z(1, 3), z(2, 3), z(0, 1), z(1, 2)});
  auto q = conjugation_stable_partition(mixed, false);
  EXPECT_EQ(q.size(), 2u);
  EXPECT_TRUE(verify_conjugation_stable_partition(mixed, q, false));

  // zeta5 * R3 together with its conjugate, plus R2 rotated by i.
  std::vector<RootOfUnity> v;
  for (int k = 0; k < 3; ++k) {
    v.push_back(z(1, 5) * z(k, 3));
    v.push_back(z(4, 5) * z(k, 3));
  }
  v.push_back(z(1, 4));
  v.push_back(z(3, 4));
  Relation s = rel(v);
  auto parts = conjugation_stable_partition(s, false);
  EXPECT_EQ(parts.size(), 3u);
  auto mod2_parts = conjugation_stable_partition(s, true);
  EXPECT_TRUE(verify_conjugation_stable_partition(s, mod2_parts, true));

  EXPECT_THROW(conjugation_stable_partition(rel({z(1, 3), z(1, 3), z(0, 1), z(0, 1)}), true),
               InvalidInput);
}

}  // namespace
}  // namespace orderone
