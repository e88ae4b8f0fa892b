#pragma once

// Laurent polynomials in z1, z2, z3 with integer coefficients.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "orderone/arith.hpp"
#include "orderone/cyclo.hpp"
#include "orderone/root_of_unity.hpp"

namespace orderone {

using Exponent3 = std::array<int, 3>;

struct LaurentTerm {
  Integer coeff;
  Exponent3 e{};

  // (e1, e2, e3, coeff).
  friend std::strong_ordering operator<=>(const LaurentTerm& a, const LaurentTerm& b) {
    if (auto c = a.e <=> b.e; c != 0) return c;
    const int s = cmp(a.coeff, b.coeff);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

// Terms are kept merged, without zero coefficients, sorted by exponent.
class LaurentExpr {
 public:
  LaurentExpr() = default;
  explicit LaurentExpr(std::vector<LaurentTerm> terms);

  static LaurentExpr constant(const Integer& c);
  static LaurentExpr monomial(const Integer& c, int e1, int e2, int e3);
  static LaurentExpr variable(int index);  // 0, 1, 2

  const std::vector<LaurentTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Exponent3& e) const;

  LaurentExpr& operator+=(const LaurentExpr& o);
  LaurentExpr& operator-=(const LaurentExpr& o);
  friend LaurentExpr operator+(LaurentExpr a, const LaurentExpr& b) { return a += b; }
  friend LaurentExpr operator-(LaurentExpr a, const LaurentExpr& b) { return a -= b; }
  friend LaurentExpr operator-(const LaurentExpr& a);
  friend LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b);

  // Substitution z_i -> z_i^-1.
  LaurentExpr inverted() const;

  // Value at (r0, r1, r2), at the lcm of the orders.
  CycInt evaluate(const std::array<RootOfUnity, 3>& at) const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const LaurentExpr& a, const LaurentExpr& b) {
    return a.terms_ <=> b.terms_;
  }
  friend bool operator==(const LaurentExpr&, const LaurentExpr&) = default;

 private:
  void normalize();
  std::vector<LaurentTerm> terms_;
};

}  // namespace orderone
