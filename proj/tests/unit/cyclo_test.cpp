#include <random>

#include <gtest/gtest.h>

#include "orderone/arith.hpp"
#include "orderone/cyclo.hpp"

namespace orderone {
namespace {

CycInt sum_of(std::int64_t level, std::initializer_list<std::pair<long, std::int64_t>> terms) {
  CycInt v(level);
  for (const auto& [c, k] : terms) v.add_term(k, c);
  return v;
}

TEST(RootOfUnity, Multiplication) {
  EXPECT_EQ(root_mul(RootOfUnity(0, 1), RootOfUnity(1, 3)), RootOfUnity(1, 3));
  EXPECT_EQ(root_mul(RootOfUnity(1, 2), RootOfUnity(1, 2)), RootOfUnity(0, 1));
  EXPECT_EQ(root_mul(RootOfUnity(1, 3), RootOfUnity(1, 5)), RootOfUnity(8, 15));
  EXPECT_EQ(RootOfUnity(6, 4).to_string(), "1/2");
  EXPECT_EQ(RootOfUnity(-1, 8), RootOfUnity(7, 8));
  EXPECT_EQ(RootOfUnity::parse("3/12"), RootOfUnity(1, 4));
  EXPECT_EQ(RootOfUnity(3, 7).pow(7), RootOfUnity::one());
  EXPECT_EQ(RootOfUnity(3, 7).inverse(), RootOfUnity(4, 7));
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_poly(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(8), (IntPoly{1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(6), (IntPoly{1, -1, 1}));
  for (std::uint64_t n = 1; n <= 120; ++n) {
    EXPECT_EQ(cyclotomic_poly(n).degree(), static_cast<int>(euler_phi(n)));
  }
  // Phi_105 is the first with a coefficient of absolute value 2.
  EXPECT_EQ(cyclotomic_poly(105).coeff(7), -2);
}

TEST(CycInt, ZeroTest) {
  EXPECT_TRUE(is_zero(sum_of(3, {{1, 0}, {1, 1}, {1, 2}})));
  EXPECT_TRUE(is_zero(CycInt::from_integer(1) - CycInt::from_integer(1)));
  EXPECT_FALSE(is_zero(sum_of(5, {{1, 0}, {1, 1}})));
}

TEST(CycInt, GeometricSums) {
  for (std::int64_t n = 2; n <= 40; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      RootOfUnity r(k, n);
      CycInt s(n);
      for (std::int64_t i = 0; i < r.order(); ++i) s += CycInt::from_root(r.pow(i), 1, n);
      EXPECT_TRUE(is_zero(s)) << r.to_string();
    }
  }
}

TEST(CycInt, Conjugation) {
  EXPECT_EQ(conjugate(sum_of(3, {{1, 1}})).coeffs(), sum_of(3, {{1, 2}}).coeffs());
  EXPECT_EQ(conjugate(sum_of(8, {{2, 0}, {1, 1}})).coeffs(), sum_of(8, {{2, 0}, {1, 7}}).coeffs());
  CycInt real = sum_of(5, {{1, 0}, {1, 1}, {1, 4}});
  EXPECT_EQ(conjugate(real).coeffs(), real.coeffs());

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 24);
    CycInt a(n), b(n);
    for (std::int64_t i = 0; i < n; ++i) {
      a.add_term(i, c(rng));
      b.add_term(i, c(rng));
    }
    EXPECT_TRUE(conjugate(a * b) == conjugate(a) * conjugate(b));
    EXPECT_TRUE(conjugate(a + b) == conjugate(a) + conjugate(b));
    EXPECT_EQ(conjugate(conjugate(a)).coeffs(), a.coeffs());
  }
}

TEST(CycInt, Evenness) {
  EXPECT_TRUE(is_even(CycInt::from_integer(2)));
  EXPECT_TRUE(is_even(sum_of(3, {{1, 0}, {1, 1}, {1, 2}})));
  EXPECT_FALSE(is_even(sum_of(3, {{1, 0}, {1, 1}})));
  // Distinct roots differ by a multiple of 2 only when they are negatives
  // of each other (and then by exactly 2 * root, never by a multiple of 4).
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const bool opposite = (2 * (j - i)) % n == 0;
        const CycInt d = sum_of(n, {{1, i}, {-1, j}});
        EXPECT_EQ(is_even(d), opposite) << n << " " << i << " " << j;
        bool div4 = true;
        const IntPoly reduced = d.power_basis();
        for (const auto& c : reduced.coeffs()) div4 = div4 && mpz_divisible_ui_p(c.get_mpz_t(), 4);
        EXPECT_FALSE(div4);
      }
    }
  }
}

TEST(CycInt, EmbeddingAndRotationInvariance) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 15);
    CycInt a(n);
    for (std::int64_t i = 0; i < n; ++i) a.add_term(i, c(rng));
    if (trial % 3 == 0) a = a - a;  // exercise the zero case
    const CycInt big = a.embed(n * 4);
    EXPECT_EQ(is_zero(a), is_zero(big));
    EXPECT_EQ(is_even(a), is_even(big));
    RootOfUnity r(static_cast<std::int64_t>(rng() % 7), 7);
    EXPECT_EQ(is_zero(a), is_zero(a * r));
    EXPECT_EQ(is_even(a), is_even(a * r));
  }
}

TEST(PowerBasisTable, MatchesExactReduction) {
  for (std::int64_t level : {1, 2, 12, 30, 105}) {
    PowerBasisTable t(level);
    for (std::int64_t k = 0; k < level; ++k) {
      IntPoly exact = CycInt::from_root(RootOfUnity(k, level), 1, level).power_basis();
      for (int j = 0; j < t.dimension(); ++j) {
        EXPECT_EQ(Integer(static_cast<long>(t.row(k)[j])), exact.coeff(static_cast<std::size_t>(j)));
      }
    }
  }
}

}  // namespace
}  // namespace orderone
