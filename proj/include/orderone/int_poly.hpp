#pragma once

// Dense univariate polynomials over Z with arbitrary-precision coefficients,
// plus the exact algorithms built on them (pseudo-division, subresultant
// gcd/resultant, radical, interpolation, resultants in a second variable).

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "orderone/arith.hpp"

namespace orderone {

class IntPoly {
 public:
  IntPoly() = default;
  // Coefficients lowest degree first.
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;

  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly derivative(const IntPoly& f);
IntPoly pow(const IntPoly& f, unsigned k);
// f(g(x)).
IntPoly compose(const IntPoly& f, const IntPoly& g);
// f(x + shift).
IntPoly taylor_shift(const IntPoly& f, const Integer& shift);

// gcd of the coefficients, nonnegative; zero for the zero polynomial.
Integer content(const IntPoly& f);
// f / content(f) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);
// Multiply by -1 if the leading coefficient is negative.
IntPoly sign_normalize(const IntPoly& f);

IntPoly divide_exact(const IntPoly& f, const Integer& d);
// Exact quotient a / b in Z[x]; throws InexactDivision otherwise.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// lc(b)^(deg a - deg b + 1) * a = q * b + r.
struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
};
PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient (subresultant PRS).
// gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Res(a, b) = lc(a)^deg(b) * prod_{a(t)=0} b(t), by the subresultant PRS.
Integer resultant(const IntPoly& a, const IntPoly& b);
// f / gcd(f, f'), primitive with positive leading coefficient.
IntPoly radical(const IntPoly& f);

// g with g^2 = f and positive leading coefficient; throws InexactDivision
// when f is not a perfect square in Z[x].
IntPoly exact_sqrt(const IntPoly& f);

// The polynomial of degree < values.size() taking values[j] at start + j.
IntPoly interpolate_consecutive(const std::vector<Integer>& values,
                                long start);

// A polynomial in y whose coefficients are polynomials in x; entry k is the
// coefficient of y^k.
using BivariatePoly = std::vector<IntPoly>;

// Res_y(f, g) as a polynomial in x, by evaluation at integer points where
// neither leading y-coefficient vanishes, followed by interpolation.
IntPoly resultant_in_y(const BivariatePoly& f, const BivariatePoly& g);

// A value a + b*sqrt(d) with d > 0 not necessarily squarefree.
struct SurdValue {
  Integer rational;
  Integer surd;
};
// f(scale * sqrt(d)) exactly.
SurdValue evaluate_at_surd(const IntPoly& f, const Integer& scale,
                           const Integer& d);
int sign(const SurdValue& v, const Integer& d);

}  // namespace orderone
