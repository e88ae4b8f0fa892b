#pragma once

// Cyclotomic integers Z[zeta_N] in the redundant basis 1, zeta, ..., zeta^(N-1).

#include <cstdint>
#include <vector>

#include "orderone/arith.hpp"
#include "orderone/int_poly.hpp"
#include "orderone/root_of_unity.hpp"

namespace orderone {

// Phi_N. Results are memoized; safe to call from several threads.
const IntPoly& cyclotomic_poly(std::uint64_t n);

class CycInt {
 public:
  explicit CycInt(std::int64_t level = 1);
  CycInt(std::int64_t level, std::vector<Integer> coeffs);

  static CycInt from_integer(const Integer& c, std::int64_t level = 1);
  // coeff * r, at the order of r unless a larger level is given.
  static CycInt from_root(const RootOfUnity& r, const Integer& coeff = 1,
                          std::int64_t level = 0);

  std::int64_t level() const { return level_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  // Same value at level k * level().
  CycInt embed(std::int64_t new_level) const;

  // Adds coeff * zeta_level^k in place.
  void add_term(std::int64_t k, const Integer& coeff);

  // Coordinates on the power basis 1, ..., zeta^(phi(N)-1).
  IntPoly power_basis() const;

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const RootOfUnity& r);
  friend CycInt operator-(const CycInt& a);
  // Value equality (not representation equality).
  friend bool operator==(const CycInt& a, const CycInt& b);

 private:
  std::int64_t level_;
  std::vector<Integer> coeffs_;
};

bool is_zero(const CycInt& v);
bool is_even(const CycInt& v);
CycInt conjugate(const CycInt& v);

// Exact remainder of a polynomial modulo Phi_N, as power-basis coordinates.
IntPoly reduce_mod_cyclotomic(const IntPoly& f, std::uint64_t n);

// Power-basis coordinates of zeta_L^k for all 0 <= k < L, as checked int64
// rows. Used by the search kernels, which only ever add a bounded number of
// rows together.
class PowerBasisTable {
 public:
  explicit PowerBasisTable(std::int64_t level);

  std::int64_t level() const { return level_; }
  int dimension() const { return dim_; }
  const std::int64_t* row(std::int64_t k) const {
    return data_.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(dim_);
  }
  // Largest absolute entry, used to bound sums.
  std::int64_t max_abs() const { return max_abs_; }

 private:
  std::int64_t level_;
  int dim_;
  std::int64_t max_abs_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace orderone
