#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "orderone/errors.hpp"
#include "orderone/int_poly.hpp"

namespace orderone {
namespace {

IntPoly random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = dist(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

// Sylvester determinant by fraction-free Bareiss elimination; the reference
// value for resultant().
Integer sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  const int m = a.degree();
  const int n = b.degree();
  const int size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = a.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = b.coeff(n - i);
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (s[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < size; ++r)
        if (s[r][k] != 0) { swap_row = r; break; }
      if (swap_row < 0) return 0;
      std::swap(s[k], s[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
      }
    }
    prev = s[k][k];
  }
  return sign * s[size - 1][size - 1];
}

TEST(IntPoly, BasicArithmetic) {
  IntPoly f{4, 0, -4, 0, 1};
  EXPECT_EQ(derivative(f), (IntPoly{0, -8, 0, 4}));
  EXPECT_EQ(IntPoly({-1, 1}) * IntPoly({1, 1}), (IntPoly{-1, 0, 1}));
  EXPECT_EQ(f.degree(), 4);
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ(f.to_string(), "x^4 - 4*x^2 + 4");
}

TEST(IntPoly, GcdExamples) {
  EXPECT_EQ(gcd(IntPoly{-1, 0, 1}, IntPoly{1, -2, 1}), (IntPoly{-1, 1}));
  EXPECT_EQ(gcd(IntPoly{2, 0, 2}, IntPoly{3, 3}), IntPoly::constant(1));
}

TEST(IntPoly, ResultantExamples) {
  EXPECT_EQ(resultant(IntPoly{1, 0, 1}, IntPoly{-2, 1}), 5);
  EXPECT_EQ(resultant(IntPoly{-2, 1}, IntPoly{1, 0, 1}), 5);
  EXPECT_EQ(resultant(IntPoly{-1, 0, 1}, IntPoly{-1, 1}), 0);
}

TEST(IntPoly, ResultantMatchesSylvester) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int da = 1 + static_cast<int>(rng() % 6);
    const int db = 1 + static_cast<int>(rng() % 6);
    IntPoly a = random_poly(rng, da, 9);
    IntPoly b = random_poly(rng, db, 9);
    if (trial % 5 == 0) {
      IntPoly h = random_poly(rng, 1, 3);
      a *= h;
      b *= h;
    }
    EXPECT_EQ(resultant(a, b), sylvester_resultant(a, b)) << a.to_string() << " / " << b.to_string();
  }
}

TEST(IntPoly, GcdOfCommonFactor) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
    IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
    IntPoly h = random_poly(rng, 1 + static_cast<int>(rng() % 3), 6);
    if (resultant(f, g) == 0) continue;
    const IntPoly expect = primitive_part(h);
    EXPECT_EQ(gcd(f * h, g * h), expect);
  }
}

TEST(IntPoly, Radical) {
  EXPECT_EQ(radical(IntPoly{4, 0, -4, 0, 1}), (IntPoly{-2, 0, 1}));
  EXPECT_EQ(radical(IntPoly{2, -2, 1}), (IntPoly{2, -2, 1}));
  IntPoly f = pow(IntPoly{-1, 1}, 3) * IntPoly{1, 1};
  EXPECT_EQ(radical(f), (IntPoly{-1, 0, 1}));
}

TEST(IntPoly, ExactDivisionAndSqrt) {
  IntPoly a{1, 2, 3, 4};
  IntPoly b{-5, 0, 7};
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_THROW(divide_exact(a * b + IntPoly{1}, b), InexactDivision);
  EXPECT_EQ(exact_sqrt(a * a), a);
  EXPECT_EQ(exact_sqrt(-a * -a), a);
  EXPECT_THROW(exact_sqrt(a * b), InexactDivision);
}

TEST(IntPoly, PseudoDivisionIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly a = random_poly(rng, 3 + static_cast<int>(rng() % 5), 20);
    IntPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 3), 20);
    auto [q, r] = pseudo_divide(a, b);
    const unsigned k = static_cast<unsigned>(a.degree() - b.degree() + 1);
    EXPECT_EQ(a * ipow(b.leading(), k), q * b + r);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(IntPoly, ComposeAndShift) {
  IntPoly f{1, -3, 0, 2};
  EXPECT_EQ(taylor_shift(f, 5), compose(f, IntPoly{5, 1}));
  EXPECT_EQ(taylor_shift(taylor_shift(f, 5), -5), f);
}

TEST(IntPoly, Interpolation) {
  IntPoly f{7, -3, 0, 2, -1};
  std::vector<Integer> values;
  for (long x = -4; x <= 0; ++x) values.push_back(f(Integer(x)));
  EXPECT_EQ(interpolate_consecutive(values, -4), f);
}

TEST(IntPoly, BivariateResultant) {
  // Res_y(y^2 + 1, y - x) = x^2 + 1.
  BivariatePoly f{IntPoly{1}, IntPoly{}, IntPoly{1}};
  BivariatePoly g{IntPoly{0, -1}, IntPoly{1}};
  EXPECT_EQ(resultant_in_y(f, g), (IntPoly{1, 0, 1}));
  // Res_y(y^2 - x, y^2 - 2) = (x - 2)^2.
  BivariatePoly h{IntPoly{0, -1}, IntPoly{}, IntPoly{1}};
  BivariatePoly k{IntPoly{-2}, IntPoly{}, IntPoly{1}};
  EXPECT_EQ(resultant_in_y(h, k), (IntPoly{4, -4, 1}));
}

TEST(IntPoly, SurdEvaluation) {
  // x^2 - 8 at 2*sqrt(2) is 0; x - 3 at 2*sqrt(2) is negative.
  auto v = evaluate_at_surd(IntPoly{-8, 0, 1}, 2, 2);
  EXPECT_EQ(sign(v, 2), 0);
  EXPECT_EQ(sign(evaluate_at_surd(IntPoly{-3, 1}, 2, 2), 2), -1);
  EXPECT_EQ(sign(evaluate_at_surd(IntPoly{-2, 1}, 1, 5), 5), 1);
}

}  // namespace
}  // namespace orderone
