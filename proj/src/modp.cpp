#include "orderone/modp.hpp"

#include "orderone/errors.hpp"

namespace orderone::modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw InvalidInput("no inverse of 0 mod p");
  return pow(a, p - 2, p);
}

std::uint64_t reduce(const Integer& v, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t prime_one_mod(std::uint64_t n, std::uint64_t floor) {
  if (n == 0) throw InvalidInput("modulus must be positive");
  for (std::uint64_t p = (floor / n + 1) * n + 1;; p += n) {
    if (p >= (std::uint64_t{1} << 32)) throw CapacityError("no word-size prime 1 mod " + std::to_string(n));
    if (is_prime(p)) return p;
  }
}

std::vector<std::uint64_t> large_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = (std::uint64_t{1} << 31) - 1; out.size() < count; p -= 2) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::uint64_t root_of_unity(std::uint64_t n, std::uint64_t p) {
  if ((p - 1) % n != 0) throw InvalidInput("n does not divide p - 1");
  const auto primes = prime_divisors(n);
  for (std::uint64_t x = 2; x < p; ++x) {
    const std::uint64_t w = pow(x, (p - 1) / n, p);
    bool exact = true;
    for (auto q : primes) {
      if (pow(w, n / q, p) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return w;
  }
  throw ConsistencyError("no root of unity found");
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly reduce(const std::vector<Integer>& coeffs, std::uint64_t p) {
  Poly f;
  f.reserve(coeffs.size());
  for (const auto& c : coeffs) f.push_back(reduce(c, p));
  trim(f);
  return f;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

Poly rem(Poly a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw InvalidInput("division by the zero polynomial");
  const std::uint64_t inv = inverse(b.back(), p);
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db) {
    const std::uint64_t c = mul(a.back(), inv, p);
    const std::size_t shift = a.size() - 1 - db;
    if (c != 0) {
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + (p - mul(c, b[j], p))) % p;
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly derivative(const Poly& f, std::uint64_t p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], i % p, p));
  trim(d);
  return d;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inverse(a.back(), p);
    for (auto& c : a) c = mul(c, inv, p);
  }
  return a;
}

Poly x_pow_mod(std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  Poly base = rem(Poly{0, 1}, f, p);
  result = rem(result, f, p);
  while (e) {
    if (e & 1) result = rem(mul(result, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

}  // namespace orderone::modp
