#pragma once

// Word-size arithmetic modulo primes below 2^31, used as fast filters ahead of
// exact confirmation.

#include <cstdint>
#include <vector>

#include "orderone/arith.hpp"

namespace orderone::modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce(const Integer& v, std::uint64_t p);

// Smallest prime p = 1 mod n with p > floor.
std::uint64_t prime_one_mod(std::uint64_t n, std::uint64_t floor = std::uint64_t{1} << 30);
// Largest primes below 2^31, descending.
std::vector<std::uint64_t> large_primes(std::size_t count);
// An element of exact order n in F_p^*; n must divide p - 1.
std::uint64_t root_of_unity(std::uint64_t n, std::uint64_t p);

// Dense polynomials over F_p, lowest degree first, trimmed.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
Poly reduce(const std::vector<Integer>& coeffs, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
// Remainder of a by a nonzero b.
Poly rem(Poly a, const Poly& b, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
// Monic gcd; the zero polynomial for gcd(0, 0).
Poly gcd(Poly a, Poly b, std::uint64_t p);
// x^e mod f.
Poly x_pow_mod(std::uint64_t e, const Poly& f, std::uint64_t p);

}  // namespace orderone::modp
