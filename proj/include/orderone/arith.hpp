#pragma once

// Small integer number theory used throughout: factorization of machine
// integers, Euler phi, divisor lists, primality.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace orderone {

using Integer = mpz_class;
using Rational = mpq_class;

// (prime, exponent) pairs in increasing prime order. n >= 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);  // sorted ascending
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
bool is_power_of_two(std::uint64_t n);  // true for 1 = 2^0
std::uint64_t odd_part(std::uint64_t n);

// Overflow-checked lcm; throws CapacityError past 2^63.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

Integer ipow(const Integer& base, unsigned long exponent);

// p-adic valuation of a nonzero integer.
unsigned valuation(const Integer& value, std::uint64_t p);

}  // namespace orderone
