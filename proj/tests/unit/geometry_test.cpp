#include "orderone/geometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace orderone {
namespace {

TEST(Geometry, FormulaCases) {
  EXPECT_EQ(f_from_formula(1), 2u);
  EXPECT_EQ(f_from_formula(4), 2u);
  EXPECT_EQ(f_from_formula(7), 3u);
  EXPECT_EQ(f_from_formula(8), 1u);
  EXPECT_EQ(f_from_formula(30), 4u);
}

TEST(Geometry, DefaultMSetIsDivisorClosed) {
  const auto ms = default_m_set(11);
  EXPECT_NE(std::find(ms.begin(), ms.end(), 22u), ms.end());
  EXPECT_NE(std::find(ms.begin(), ms.end(), 2520u), ms.end());
  for (const auto m : ms) {
    for (std::uint64_t d = 1; d <= m; ++d) {
      if (m % d == 0) EXPECT_NE(std::find(ms.begin(), ms.end(), d), ms.end()) << d << " | " << m;
    }
  }
}

TEST(Geometry, OracleMatchesFormula) {
  for (std::uint64_t n = 1; n <= 32; ++n) {
    for (const auto& r : decompose(n)) {
      EXPECT_EQ(r.f_oracle, r.f_formula) << "n = " << n;
      EXPECT_EQ(r.geom_simple, r.f_oracle == 1) << "n = " << n;
    }
  }
}

TEST(Geometry, OrdinaryXorGeomSimple) {
  for (std::uint64_t n = 1; n <= 32; ++n) EXPECT_TRUE(ordinary_xor_geom_simple(n)) << "n = " << n;
}

TEST(Geometry, NewtonPolygonForcesSimplicityAtPowersOfTwo) {
  for (std::uint64_t n : {8u, 16u, 32u, 64u}) {
    const auto reports = decompose(n);
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_TRUE(np_forces_geom_simple(reports[0].weil, WeilContext{2, 1})) << "n = " << n;
    EXPECT_TRUE(reports[0].geom_simple);
  }
}

TEST(Geometry, IsogenousPairs) {
  EXPECT_TRUE(geom_isogenous(1, 2));
  EXPECT_TRUE(geom_isogenous(6, 7));
  EXPECT_FALSE(geom_isogenous(3, 5));
}

TEST(Geometry, PairsUpToThirty) {
  const std::set<std::set<std::uint64_t>> expected{{1, 2}, {1, 4}, {2, 4}, {3, 30}, {6, 7}, {7}, {30}};
  EXPECT_EQ(geometric_isogeny_pairs(30), expected);
}

}  // namespace
}  // namespace orderone
