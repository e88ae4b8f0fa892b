#include "orderone/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "orderone/arith.hpp"
#include "orderone/errors.hpp"
#include "orderone/madan_pal.hpp"
#include "orderone/modp.hpp"

namespace orderone {

std::uint64_t f_from_formula(std::uint64_t n) {
  if (n == 0) throw InvalidInput("n must be positive");
  if (n == 4) return 2;
  if (n > 1 && is_power_of_two(n)) return 1;
  if (n == 7) return 3;
  if (n == 30) return 4;
  return 2;
}

std::vector<std::uint64_t> default_m_set(std::uint64_t n1, std::uint64_t n2) {
  if (n1 == 0 || n2 == 0) throw InvalidInput("n must be positive");
  return divisors(checked_lcm(checked_lcm(2520, 2 * n1), 2 * n2));
}

namespace {

constexpr std::size_t kFilterPrimes = 2;
// Exact base extensions beyond this m * deg are refused.
constexpr std::uint64_t kMaxExactWork = 400000;

const std::vector<std::uint64_t>& filter_primes() {
  static const std::vector<std::uint64_t> primes = modp::large_primes(kFilterPrimes);
  return primes;
}

// Q0_m mod p, through traces of x^(k m) in F_p[x]/(Q0) and Newton's identities.
class ModpExtension {
 public:
  ModpExtension(const IntPoly& q0, std::uint64_t p) : p_(p), d_(static_cast<std::size_t>(q0.degree())) {
    f_ = modp::reduce(q0.coeffs(), p);
    const auto sums = power_sums(q0, d_ > 1 ? d_ - 1 : 1);
    traces_.push_back(d_ % p);
    for (std::size_t i = 1; i < d_; ++i) traces_.push_back(modp::reduce(sums[i - 1], p));
  }

  modp::Poly extend(std::uint64_t m) const {
    const modp::Poly a = modp::x_pow_mod(m, f_, p_);
    modp::Poly b{1};
    std::vector<std::uint64_t> ps(d_ + 1, 0);
    for (std::size_t k = 1; k <= d_; ++k) {
      b = modp::rem(modp::mul(b, a, p_), f_, p_);
      std::uint64_t t = 0;
      for (std::size_t i = 0; i < b.size(); ++i) t = (t + modp::mul(b[i], traces_[i], p_)) % p_;
      ps[k] = t;
    }
    std::vector<std::uint64_t> e(d_ + 1, 0);
    e[0] = 1;
    for (std::size_t k = 1; k <= d_; ++k) {
      std::uint64_t acc = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        const std::uint64_t term = modp::mul(e[k - i], ps[i], p_);
        acc = (i % 2 == 1) ? (acc + term) % p_ : (acc + p_ - term) % p_;
      }
      e[k] = modp::mul(acc, modp::inverse(k % p_, p_), p_);
    }
    modp::Poly out(d_ + 1);
    for (std::size_t k = 0; k <= d_; ++k) out[d_ - k] = (k % 2 == 0) ? e[k] : (p_ - e[k]) % p_;
    modp::trim(out);
    return out;
  }

  int radical_degree(std::uint64_t m) const {
    const modp::Poly g = extend(m);
    const modp::Poly common = modp::gcd(g, modp::derivative(g, p_), p_);
    return static_cast<int>(d_) - static_cast<int>(common.size() - 1);
  }

 private:
  std::uint64_t p_;
  std::size_t d_;
  modp::Poly f_;
  std::vector<std::uint64_t> traces_;
};

std::vector<ModpExtension> modp_extensions(const IntPoly& q0) {
  std::vector<ModpExtension> out;
  for (auto p : filter_primes()) out.emplace_back(q0, p);
  return out;
}

void require_divisor_closed(const std::vector<std::uint64_t>& m_set) {
  if (m_set.empty()) throw InvalidInput("m_set must not be empty");
  const std::set<std::uint64_t> s(m_set.begin(), m_set.end());
  for (auto m : s) {
    if (m == 0) throw InvalidInput("m_set entries must be positive");
    for (auto d : divisors(m)) {
      if (!s.count(d)) throw InvalidInput("m_set must be closed under divisors (missing " + std::to_string(d) + ")");
    }
  }
}

std::uint64_t lcm_of(const std::vector<std::uint64_t>& ms) {
  std::uint64_t l = 1;
  for (auto m : ms) l = checked_lcm(l, m);
  return l;
}

IntPoly exact_extension(const IntPoly& q0, std::uint64_t m) {
  if (m * static_cast<std::uint64_t>(q0.degree()) > kMaxExactWork) {
    throw CapacityError("exact base extension of degree " + std::to_string(q0.degree()) + " by m = " +
                        std::to_string(m) + " exceeds the work bound");
  }
  return base_extension(q0, m);
}

// Honda-Tate exponent of the simple class over F_{q^m} with Weil polynomial
// a power of rad; k is the total exponent (Q0_m = rad^k), which the answer
// must divide.
int extension_exponent(const IntPoly& rad, std::uint64_t m, long k, const WeilContext& ctx) {
  const WeilContext ext{ctx.p, static_cast<unsigned>(ctx.a * m)};
  if (auto e = honda_tate_exponent(rad, ext)) {
    if (k % *e != 0) throw ConsistencyError("Honda-Tate exponent does not divide the multiplicity");
    return *e;
  }
  // Irregular residual polynomial: fall back on the integrality bound when it
  // pins the answer down.
  const int lower = honda_tate_exponent_lower_bound(rad, ext);
  std::vector<int> candidates;
  for (long e = lower; e <= k; e += lower) {
    if (k % e == 0) candidates.push_back(static_cast<int>(e));
  }
  if (candidates.size() != 1) {
    throw ConsistencyError("Honda-Tate exponent undetermined at m = " + std::to_string(m) + " for " + rad.to_string());
  }
  return candidates.front();
}

}  // namespace

MultiplicityResult f_oracle(const IntPoly& q0, const std::vector<std::uint64_t>& m_set, int e_base,
                            const WeilContext& ctx) {
  if (!q0.is_monic() || q0.degree() < 1) throw InvalidInput("Q0 must be monic of positive degree");
  if (radical(q0).degree() != q0.degree()) throw InvalidInput("Q0 must be squarefree");
  require_divisor_closed(m_set);
  std::vector<std::uint64_t> ms(m_set.begin(), m_set.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

  const auto filters = modp_extensions(q0);
  auto lower_bound = [&](std::uint64_t m) {
    int lb = 0;
    for (const auto& f : filters) lb = std::max(lb, f.radical_degree(m));
    return lb;
  };
  struct Exact {
    int radical_degree;
    int exponent;
  };
  std::map<std::uint64_t, Exact> exact;
  auto exact_at = [&](std::uint64_t m) {
    auto it = exact.find(m);
    if (it != exact.end()) return it->second;
    const IntPoly rad = radical(exact_extension(q0, m));
    const long k = static_cast<long>(e_base) * q0.degree() / rad.degree();
    return exact.emplace(m, Exact{rad.degree(), extension_exponent(rad, m, k, ctx)}).first->second;
  };

  // Radical degrees only drop along divisibility, so the minimum sits at N.
  const std::uint64_t big = lcm_of(ms);
  std::map<std::uint64_t, int> lbs;
  for (auto m : ms) lbs[m] = lower_bound(m);
  const int lb_big = lbs.at(big);
  std::uint64_t certified = 0;
  for (auto m : ms) {
    if (lbs[m] > lb_big) continue;
    if (exact_at(m).radical_degree == lb_big) {
      certified = m;
      break;
    }
  }
  if (certified == 0) {
    throw ConsistencyError("could not certify the radical degree at m = " + std::to_string(big));
  }
  const int r_big = lb_big;
  const int e_big = exact_at(certified).exponent;

  MultiplicityResult res;
  res.degree = q0.degree();
  res.e_base = e_base;
  const long num = static_cast<long>(e_base) * q0.degree();
  const long den = static_cast<long>(e_big) * r_big;
  for (auto m : ms) {
    if (lbs[m] > den) continue;
    const Exact x = exact_at(m);
    const long here = static_cast<long>(x.exponent) * x.radical_degree;
    if (here < den) throw ConsistencyError("multiplicity is not monotone in m");
    if (here == den) {
      res.stabilizing_m = m;
      res.radical_degree = x.radical_degree;
      res.e_extension = x.exponent;
      break;
    }
  }
  res.integral = num % den == 0;
  res.f = res.integral ? static_cast<std::uint64_t>(num / den) : 0;
  return res;
}

std::vector<SimpleFactor> distinct_simple_factors(std::uint64_t n) {
  const MadanPalRecord rec = build_record(n);
  std::vector<SimpleFactor> out;
  for (const auto& r : rec.simple_factors) {
    if (std::any_of(out.begin(), out.end(), [&](const SimpleFactor& s) { return s.real_weil == r; })) continue;
    SimpleFactor s;
    s.real_weil = r;
    s.weil = real_to_weil(r, kF2);
    s.q0 = radical(s.weil);
    s.e = s.weil.degree() / s.q0.degree();
    if (!(pow(s.q0, static_cast<unsigned>(s.e)) == s.weil)) throw ConsistencyError("Weil polynomial is not a power");
    const int honda_tate = hondatate_irreducibility_over_Fp(s.q0, kF2) ? 1 : 2;
    if (honda_tate != s.e) throw ConsistencyError("Honda-Tate exponent mismatch at n = " + std::to_string(n));
    out.push_back(std::move(s));
  }
  return out;
}

bool geom_isogenous(const SimpleFactor& a, const SimpleFactor& b, const std::vector<std::uint64_t>& m_set) {
  if (a.q0 == b.q0) return true;
  require_divisor_closed(m_set);
  std::vector<std::uint64_t> ms(m_set.begin(), m_set.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  const auto fa = modp_extensions(a.q0);
  const auto fb = modp_extensions(b.q0);
  auto may_share = [&](std::uint64_t m) {
    for (std::size_t i = 0; i < fa.size(); ++i) {
      const auto p = filter_primes()[i];
      if (modp::gcd(fa[i].extend(m), fb[i].extend(m), p).size() <= 1) return false;
    }
    return true;
  };
  // Shared eigenvalues persist under further powers; a trivial gcd mod p at
  // the lcm rules out every m.
  if (!may_share(lcm_of(ms))) return false;
  for (auto m : ms) {
    if (!may_share(m)) continue;
    if (gcd(exact_extension(a.q0, m), exact_extension(b.q0, m)).degree() > 0) return true;
  }
  throw ConsistencyError("mod-p filter reports a shared eigenvalue that no exact check confirms");
}

bool geom_isogenous(std::uint64_t n1, std::uint64_t n2, std::vector<std::uint64_t> m_set) {
  if (m_set.empty()) m_set = default_m_set(n1, n2);
  for (const auto& a : distinct_simple_factors(n1)) {
    for (const auto& b : distinct_simple_factors(n2)) {
      if (geom_isogenous(a, b, m_set)) return true;
    }
  }
  return false;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::set<std::set<std::uint64_t>> geometric_isogeny_pairs(std::uint64_t max_n, unsigned workers) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> jobs;
  for (std::uint64_t a = 1; a <= max_n; ++a) {
    for (std::uint64_t b = a; b <= max_n; ++b) jobs.emplace_back(a, b);
  }
  // Warm the record cache before going parallel.
  for (std::uint64_t n = 1; n <= max_n; ++n) build_record(n);
  std::vector<char> hit(jobs.size(), 0);
  parallel_for(jobs.size(), workers, [&](std::size_t i) {
    const auto [a, b] = jobs[i];
    if (a != b) {
      hit[i] = geom_isogenous(a, b);
      return;
    }
    const auto factors = distinct_simple_factors(a);
    const auto ms = default_m_set(a);
    for (std::size_t x = 0; x < factors.size() && !hit[i]; ++x) {
      for (std::size_t y = x + 1; y < factors.size() && !hit[i]; ++y) {
        hit[i] = geom_isogenous(factors[x], factors[y], ms);
      }
    }
  });
  std::set<std::set<std::uint64_t>> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (hit[i]) out.insert({jobs[i].first, jobs[i].second});
  }
  return out;
}

std::vector<DecompositionReport> decompose(std::uint64_t n, std::vector<std::uint64_t> m_set) {
  if (m_set.empty()) m_set = default_m_set(n);
  std::vector<DecompositionReport> out;
  for (const auto& s : distinct_simple_factors(n)) {
    DecompositionReport r;
    r.n = n;
    r.simple_factor = s.real_weil;
    r.weil = s.weil;
    r.dimension = s.weil.degree() / 2;
    r.f_formula = f_from_formula(n);
    const MultiplicityResult m = f_oracle(s.q0, m_set, s.e, kF2);
    if (!m.integral) {
      throw ConsistencyError("degree ratio is not an integer at n = " + std::to_string(n));
    }
    r.f_oracle = m.f;
    r.stabilizing_m = m.stabilizing_m;
    r.geom_simple = m.f == 1;
    r.ordinary = is_ordinary(s.weil, kF2);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DecompositionReport> decompose_range(std::uint64_t max_n, unsigned workers) {
  for (std::uint64_t n = 1; n <= max_n; ++n) build_record(n);
  std::vector<std::vector<DecompositionReport>> parts(max_n);
  parallel_for(max_n, workers, [&](std::size_t i) { parts[i] = decompose(i + 1); });
  std::vector<DecompositionReport> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool ordinary_xor_geom_simple(const DecompositionReport& r) {
  if (r.ordinary && r.geom_simple) return false;
  if (r.dimension >= 3) return r.ordinary != r.geom_simple;
  return true;
}

bool ordinary_xor_geom_simple(std::uint64_t n) {
  for (const auto& r : decompose(n)) {
    if (!ordinary_xor_geom_simple(r)) return false;
  }
  return true;
}

}  // namespace orderone
