#include <cmath>
#include <complex>
#include <numeric>

#include <gtest/gtest.h>

#include "orderone/arith.hpp"
#include "orderone/madan_pal.hpp"

namespace orderone {
namespace {

// Floating-point expansion of the defining product, rounded; an independent
// check on the resultant construction for moderate n.
std::vector<long> float_product(std::uint64_t n) {
  std::vector<double> c{1.0};
  for (std::uint64_t k = 0; 2 * k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const double t = 4.0 + 2.0 * std::cos(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));
    std::vector<double> next(c.size() + 2, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= t * c[i];
      next[i + 2] += c[i];
    }
    c = next;
  }
  std::vector<long> out;
  for (double x : c) out.push_back(std::lround(x));
  return out;
}

TEST(MadanPal, SmallPolynomials) {
  EXPECT_EQ(madan_pal_poly(1), (IntPoly{1, -6, 1}));
  EXPECT_EQ(madan_pal_poly(2), (IntPoly{1, -2, 1}));
  EXPECT_EQ(madan_pal_poly(7), IntPoly({-1, 6, -5, 1}) * IntPoly({-1, 5, -6, 1}));
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const IntPoly p = madan_pal_poly(n);
    const auto expected = float_product(n);
    ASSERT_EQ(p.degree() + 1, static_cast<int>(expected.size())) << n;
    for (int i = 0; i <= p.degree(); ++i) {
      // Coefficients are stored lowest first; the float product is the same.
      EXPECT_EQ(p.coeff(static_cast<std::size_t>(i)), expected[static_cast<std::size_t>(i)]) << n;
    }
  }
}

TEST(MadanPal, Degrees) {
  for (std::uint64_t n = 1; n <= 120; ++n) {
    EXPECT_EQ(madan_pal_poly(n).degree(), static_cast<int>(std::max<std::uint64_t>(2, euler_phi(n)))) << n;
  }
}

TEST(MadanPal, FactorLists) {
  EXPECT_EQ(simple_factor_list(30).size(), 2u);
  EXPECT_EQ(simple_factor_list(2), (std::vector<IntPoly>{IntPoly{-1, 1}, IntPoly{-1, 1}}));
  EXPECT_EQ(simple_factor_list(5), std::vector<IntPoly>{madan_pal_poly(5)});
}

TEST(MadanPal, Records) {
  const auto r1 = build_record(1);
  EXPECT_EQ(r1.real_weil, (IntPoly{-8, 0, 1}));
  EXPECT_EQ(r1.weil, (IntPoly{4, 0, -4, 0, 1}));
  const auto r3 = build_record(3);
  EXPECT_EQ(r3.real_weil, (IntPoly{1, -3, 1}));
  EXPECT_EQ(r3.weil, (IntPoly{4, -6, 5, -3, 1}));
  EXPECT_TRUE(r3.ordinary);
  const auto r4 = build_record(4);
  EXPECT_EQ(r4.weil(Integer(1)), 1);
  Rational half(1, 2);
  EXPECT_EQ(r4.newton, (NewtonPolygon{{{half, 4}}}));
  for (std::uint64_t n = 1; n <= 64; ++n) {
    const auto r = build_record(n);
    EXPECT_EQ(r.weil(Integer(1)), 1) << n;
    EXPECT_TRUE(is_real_weil(r.real_weil, kF2)) << n;
    IntPoly product = IntPoly::constant(1);
    for (const auto& f : r.simple_factors) product *= f;
    EXPECT_EQ(product, r.real_weil) << n;
  }
}

TEST(MadanPal, Lemmas) {
  EXPECT_EQ(madan_pal_poly(4)(Integer(1)), -2);
  EXPECT_EQ(madan_pal_poly(8)(Integer(1)), 2);
  EXPECT_EQ(madan_pal_poly(16)(Integer(1)), 2);
  for (unsigned m = 2; m <= 6; ++m) EXPECT_TRUE(pn_at_one_check(m)) << m;
  EXPECT_TRUE(newton_lemma_check(6));
  EXPECT_TRUE(newton_lemma_check(8));
  EXPECT_TRUE(newton_lemma_check(2));
  EXPECT_TRUE(newton_lemma_check(1));
  EXPECT_TRUE(np_forces_geom_simple(build_record(8).weil, kF2));
}

TEST(MadanPal, EigenvalueIdentity) {
  EXPECT_TRUE(eigenvalue_resultant_identity(3));
  EXPECT_TRUE(eigenvalue_resultant_identity(7));
  EXPECT_TRUE(eigenvalue_resultant_identity(30));
}

}  // namespace
}  // namespace orderone
