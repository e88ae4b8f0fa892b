#include <random>

#include <gtest/gtest.h>

#include "orderone/errors.hpp"
#include "orderone/weil.hpp"

namespace orderone {
namespace {

const WeilContext kQ2{2, 1};

Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly f = IntPoly::constant(1);
  for (long r : roots) f *= IntPoly{-r, 1};
  return f;
}

TEST(Weil, RealToWeil) {
  EXPECT_EQ(real_to_weil(IntPoly{-2, 1}, kQ2), (IntPoly{2, -2, 1}));
  EXPECT_EQ(real_to_weil(IntPoly{-8, 0, 1}, kQ2), (IntPoly{4, 0, -4, 0, 1}));
  const IntPoly w = real_to_weil(IntPoly{1, -3, 1}, kQ2);
  EXPECT_EQ(w, (IntPoly{4, -6, 5, -3, 1}));
  EXPECT_EQ(w(Integer(1)), 1);
}

TEST(Weil, IsRealWeil) {
  EXPECT_TRUE(is_real_weil(IntPoly{-8, 0, 1}, kQ2));
  EXPECT_FALSE(is_real_weil(IntPoly{-9, 0, 1}, kQ2));
  EXPECT_FALSE(is_real_weil(IntPoly{-1, 6, -5, 1}, kQ2));
  EXPECT_FALSE(is_real_weil(IntPoly{1, 0, 1}, kQ2));  // complex roots
  EXPECT_TRUE(is_real_weil(IntPoly{1, -3, 1}, kQ2));
}

TEST(Weil, SturmCountsAgainstKnownRoots) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<long> roots;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) roots.push_back(static_cast<long>(rng() % 13) - 6);
    const IntPoly f = from_roots(roots);
    // Oracle: count distinct integer roots with |r| <= 2 sqrt(2), i.e. |r| <= 2.
    const bool inside = std::all_of(roots.begin(), roots.end(), [](long r) { return r * r <= 8; });
    EXPECT_EQ(is_real_weil(f, kQ2), inside);
    std::set<long> distinct(roots.begin(), roots.end());
    EXPECT_EQ(SturmSequence(radical(f)).count_real_roots(), static_cast<int>(distinct.size()));
    // A factor with roots at the endpoints keeps the answer.
    EXPECT_EQ(is_real_weil(f * IntPoly{-8, 0, 1}, kQ2), inside);
  }
}

TEST(Weil, NewtonPolygons) {
  NewtonPolygon a = newton_polygon(IntPoly{2, -2, 1}, kQ2);
  EXPECT_EQ(a, (NewtonPolygon{{{frac(1, 2), 2}}}));
  NewtonPolygon b = newton_polygon(IntPoly{4, 0, -4, 0, 1}, kQ2);
  EXPECT_EQ(b, (NewtonPolygon{{{frac(1, 2), 4}}}));
  NewtonPolygon c = newton_polygon(IntPoly{4, -6, 5, -3, 1}, kQ2);
  EXPECT_EQ(c, (NewtonPolygon{{{frac(0, 1), 2}, {frac(1, 1), 2}}}));
  EXPECT_TRUE(is_ordinary(IntPoly{4, -6, 5, -3, 1}, kQ2));
  EXPECT_FALSE(is_ordinary(IntPoly{4, 0, -4, 0, 1}, kQ2));
  // x^2 - 2x + 2 has roots 1 +- i, of valuation 1/2.
  EXPECT_FALSE(is_ordinary(IntPoly{2, -2, 1}, kQ2));
  EXPECT_THROW(newton_polygon(IntPoly{0, 1}, kQ2), InvalidInput);
  // q = 4: valuations are halved.
  EXPECT_EQ(newton_polygon(IntPoly{4, 1}, WeilContext{2, 2}), (NewtonPolygon{{{frac(1, 1), 1}}}));
}

TEST(Weil, NewtonPolygonOfTransformKeepsSmallSlopes) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Integer> c;
    const int d = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < d; ++i) c.push_back(static_cast<long>(rng() % 41) - 20);
    c.push_back(1);
    if (c[0] == 0) c[0] = 2;
    const IntPoly r(c);
    const IntPoly w = real_to_weil(r, kQ2);
    EXPECT_EQ(functional_equation_sign(w, kQ2), std::optional<int>(1));
    auto small = [](const NewtonPolygon& np) {
      std::vector<NewtonSegment> out;
      for (const auto& s : np.segments)
        if (s.slope < frac(1, 2)) out.push_back(s);
      return out;
    };
    EXPECT_EQ(small(newton_polygon(r, kQ2)), small(newton_polygon(w, kQ2))) << r.to_string();
  }
}

TEST(Weil, FunctionalEquation) {
  EXPECT_EQ(functional_equation_sign(IntPoly{2, -2, 1}, kQ2), std::optional<int>(1));
  // x^2 - 2 satisfies the equation with the minus sign.
  EXPECT_EQ(functional_equation_sign(IntPoly{-2, 0, 1}, kQ2), std::optional<int>(-1));
  EXPECT_EQ(functional_equation_sign(IntPoly{1, -1, 1}, kQ2), std::nullopt);
}

TEST(Weil, BaseExtension) {
  const IntPoly e{2, -2, 1};
  EXPECT_EQ(base_extension(e, 1), e);
  EXPECT_EQ(base_extension(e, 2), (IntPoly{4, 0, 1}));
  EXPECT_EQ(base_extension(IntPoly{-2, 0, 1}, 2), (IntPoly{4, -4, 1}));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Integer> c;
    const int d = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < d; ++i) c.push_back(static_cast<long>(rng() % 11) - 5);
    c.push_back(1);
    const IntPoly q(c);
    for (std::uint64_t n = 1; n <= 8; ++n) {
      EXPECT_EQ(base_extension_resultant(q, n), base_extension_power_sums(q, n));
    }
    const std::uint64_t m = 2 + rng() % 3;
    const std::uint64_t n = 2 + rng() % 4;
    EXPECT_EQ(base_extension(base_extension(q, m), n), base_extension(q, m * n));
  }
}

TEST(Weil, RadicalDegreesCoarsen) {
  const IntPoly w{4, -6, 5, -3, 1};
  for (std::uint64_t m = 1; m <= 12; ++m) {
    const int dm = radical(base_extension(w, m)).degree();
    for (std::uint64_t n = 1; n <= 5; ++n) {
      EXPECT_LE(radical(base_extension(w, m * n)).degree(), dm);
    }
  }
}

TEST(Weil, Predicates) {
  EXPECT_FALSE(ratio_root_of_unity_free(IntPoly{-2, 0, 1}, {2}));
  EXPECT_TRUE(ratio_root_of_unity_free(IntPoly{2, -2, 1}, {2, 3}));
  // (1 + i) / (1 - i) = i, so the fourth powers coincide.
  EXPECT_FALSE(ratio_root_of_unity_free(IntPoly{2, -2, 1}, {2, 3, 4}));
  EXPECT_EQ(base_extension(IntPoly{2, -2, 1}, 4), (IntPoly{16, 8, 1}));
  EXPECT_FALSE(np_forces_geom_simple(IntPoly{4, 0, -4, 0, 1}, kQ2));
  EXPECT_FALSE(np_forces_geom_simple(IntPoly{4, -6, 5, -3, 1}, kQ2));
  EXPECT_FALSE(hondatate_irreducibility_over_Fp(IntPoly{-2, 0, 1}, kQ2));
  EXPECT_TRUE(hondatate_irreducibility_over_Fp(IntPoly{2, -2, 1}, kQ2));
  EXPECT_TRUE(hondatate_irreducibility_over_Fp(IntPoly{4, -6, 5, -3, 1}, kQ2));
}

TEST(Weil, PlacesAboveTwo) {
  const auto rational = places_above_p(IntPoly{-64, 1}, WeilContext{2, 12});
  ASSERT_TRUE(rational.has_value());
  EXPECT_EQ(*rational, (std::vector<LocalPlace>{{Rational(1, 2), 1}}));
  // Q_2(i) is ramified of degree 2, so the invariant 1/2 * 2 is integral.
  const auto gaussian = places_above_p(IntPoly{4096, 0, 1}, WeilContext{2, 12});
  ASSERT_TRUE(gaussian.has_value());
  EXPECT_EQ(*gaussian, (std::vector<LocalPlace>{{Rational(1, 2), 2}}));
}

TEST(Weil, HondaTateExponent) {
  EXPECT_EQ(honda_tate_exponent(IntPoly{-2, 0, 1}, kQ2), 2);
  EXPECT_EQ(honda_tate_exponent(IntPoly{2, -2, 1}, kQ2), 1);
  EXPECT_EQ(honda_tate_exponent(IntPoly{-64, 1}, WeilContext{2, 12}), 2);
  EXPECT_EQ(honda_tate_exponent(IntPoly{4096, 0, 1}, WeilContext{2, 12}), 1);
  // Two quadratic places with slopes 1/4 and 3/4 over F_256.
  const IntPoly h{65536, 2048, 16, 8, 1};
  EXPECT_EQ(honda_tate_exponent(h, WeilContext{2, 8}), 2);
  EXPECT_EQ(honda_tate_exponent_lower_bound(h, WeilContext{2, 8}), 2);
  EXPECT_EQ(honda_tate_exponent(h, WeilContext{2, 12}), 3);
}

}  // namespace
}  // namespace orderone
