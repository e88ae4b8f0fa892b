#include "orderone/padic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "orderone/errors.hpp"

namespace orderone {
namespace {

std::vector<PadicFactor> factors(const IntPoly& h, std::uint64_t p) {
  const auto f = padic_factor_degrees(h, p);
  EXPECT_TRUE(f.has_value()) << h.to_string();
  return f.value_or(std::vector<PadicFactor>{});
}

PadicFactor pf(long num, long den, int degree) { return {Rational(num, den), degree}; }

TEST(Padic, QuadraticsOverQ2) {
  EXPECT_EQ(factors(IntPoly{-2, 0, 1}, 2), (std::vector{pf(1, 2, 2)}));
  // -7 is a 2-adic square, -3 is not and Q_2(sqrt -3) is unramified.
  EXPECT_EQ(factors(IntPoly{7, 0, 1}, 2), (std::vector{pf(0, 1, 1), pf(0, 1, 1)}));
  EXPECT_EQ(factors(IntPoly{3, 0, 1}, 2), (std::vector{pf(0, 1, 2)}));
  EXPECT_EQ(factors(IntPoly{1, 0, 1}, 2), (std::vector{pf(0, 1, 2)}));
  EXPECT_EQ(factors(IntPoly{4096, 0, 1}, 2), (std::vector{pf(6, 1, 2)}));
}

TEST(Padic, OtherPrimes) {
  EXPECT_EQ(factors(IntPoly{1, 0, 1}, 5), (std::vector{pf(0, 1, 1), pf(0, 1, 1)}));
  EXPECT_EQ(factors(IntPoly{1, 0, 1}, 3), (std::vector{pf(0, 1, 2)}));
  EXPECT_EQ(factors(IntPoly{-3, 0, 0, 1}, 3), (std::vector{pf(1, 3, 3)}));
}

TEST(Padic, CyclotomicPolynomials) {
  // 2 has order 3 mod 7 and order 4 mod 15.
  EXPECT_EQ(factors(IntPoly{1, 1, 1, 1, 1, 1, 1}, 2), (std::vector{pf(0, 1, 3), pf(0, 1, 3)}));
  EXPECT_EQ(factors(IntPoly{1, -1, 0, 1, -1, 1, 0, -1, 1}, 2), (std::vector{pf(0, 1, 4), pf(0, 1, 4)}));
  EXPECT_EQ(factors(IntPoly{1, 0, 0, 0, 1}, 2), (std::vector{pf(0, 1, 4)}));
}

TEST(Padic, RepeatedResidualRoots) {
  // Two ramified quadratic places with the same first-order data.
  EXPECT_EQ(factors(IntPoly{36, 0, -20, 0, 1}, 2), (std::vector{pf(1, 2, 2), pf(1, 2, 2)}));
  EXPECT_EQ(factors(IntPoly{-2, 0, 0, 0, 1}, 2), (std::vector{pf(1, 4, 4)}));
  // Two quadratic places with root valuations 2 and 6.
  EXPECT_EQ(factors(IntPoly{65536, 2048, 16, 8, 1}, 2), (std::vector{pf(2, 1, 2), pf(6, 1, 2)}));
}

TEST(Padic, RejectsBadInput) {
  EXPECT_THROW(padic_factor_degrees(IntPoly{0, 1, 1}, 2), InvalidInput);
  EXPECT_THROW(padic_factor_degrees(IntPoly{1, 2, 1}, 2), InvalidInput);
  EXPECT_THROW(padic_factor_degrees(IntPoly{1, 2}, 2), InvalidInput);
}

// Products of known irreducible factors: Eisenstein polynomials (totally
// ramified) and lifts of irreducible polynomials mod p (unramified), with
// roots scaled by powers of p. Nearby Eisenstein polynomials force deep
// refinements.
TEST(Padic, RandomProductsOfKnownIrreducibles) {
  std::mt19937_64 rng(20240611);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      IntPoly h = IntPoly::constant(1);
      std::vector<PadicFactor> expected;
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < count; ++k) {
        const long scale = static_cast<long>(rng() % 3);
        const Integer ps = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(scale));
        IntPoly g;
        int degree;
        Rational val;
        if (rng() % 2 == 0) {
          degree = 1 + static_cast<int>(rng() % 4);
          std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
          c.back() = 1;
          const Integer unit = Integer(static_cast<unsigned long>(1 + rng() % (p - 1))) +
                               Integer(static_cast<unsigned long>(p * p)) * static_cast<unsigned long>(rng() % 4);
          c[0] = Integer(static_cast<unsigned long>(p)) * unit;
          for (int i = 1; i < degree; ++i) {
            c[static_cast<std::size_t>(i)] = Integer(static_cast<unsigned long>(p)) * static_cast<unsigned long>(rng() % 3);
          }
          g = IntPoly(c);
          val = Rational(1, degree) + scale;
        } else {
          // x^2 + x + 1 mod 2, x^2 + 1 mod 3 and x^2 + 2 mod 5 are irreducible.
          degree = 2;
          const long c = static_cast<long>(p) * static_cast<long>(rng() % 4);
          g = p == 2 ? IntPoly{1 + c, 1, 1} : IntPoly{(p == 3 ? 1 : 2) + c, 0, 1};
          val = Rational(scale);
        }
        val.canonicalize();
        // Roots scaled by p^scale.
        std::vector<Integer> sc(g.coeffs());
        for (std::size_t i = 0; i < sc.size(); ++i) {
          sc[i] *= ipow(ps, static_cast<unsigned long>(degree - static_cast<int>(i)));
        }
        h *= IntPoly(sc);
        expected.push_back({val, degree});
      }
      if (radical(h).degree() != h.degree()) continue;
      std::sort(expected.begin(), expected.end(), [](const PadicFactor& a, const PadicFactor& b) {
        return a.valuation != b.valuation ? a.valuation < b.valuation : a.degree < b.degree;
      });
      EXPECT_EQ(factors(h, p), expected) << h.to_string();
    }
  }
}

}  // namespace
}  // namespace orderone
