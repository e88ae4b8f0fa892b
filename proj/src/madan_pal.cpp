#include "orderone/madan_pal.hpp"

#include <map>
#include <mutex>

#include "orderone/arith.hpp"
#include "orderone/cyclo.hpp"
#include "orderone/errors.hpp"

namespace orderone {

namespace {

BivariatePoly cyclotomic_in_y(std::uint64_t n) {
  BivariatePoly f;
  for (const auto& c : cyclotomic_poly(n).coeffs()) f.push_back(IntPoly::constant(c));
  return f;
}

}  // namespace

IntPoly madan_pal_poly(std::uint64_t n) {
  if (n == 0) throw InvalidInput("n must be positive");
  if (n == 1) return IntPoly{1, -6, 1};
  if (n == 2) return IntPoly{1, -2, 1};
  // y x^2 - (y^2 + 4y + 1) x + y, as a polynomial in y.
  const BivariatePoly quad{IntPoly{0, -1}, IntPoly{1, -4, 1}, IntPoly{0, -1}};
  const IntPoly square = sign_normalize(resultant_in_y(cyclotomic_in_y(n), quad));
  IntPoly p = exact_sqrt(square);
  if (!p.is_monic()) throw ConsistencyError("P_n is not monic");
  return p;
}

std::vector<IntPoly> simple_factor_list(std::uint64_t n) {
  std::vector<IntPoly> factors;
  switch (n) {
    case 2:
      factors = {IntPoly{-1, 1}, IntPoly{-1, 1}};
      break;
    case 7:
      factors = {IntPoly{-1, 6, -5, 1}, IntPoly{-1, 5, -6, 1}};
      break;
    case 30:
      factors = {IntPoly{1, -7, 14, -8, 1}, IntPoly{1, -8, 14, -7, 1}};
      break;
    default:
      return {madan_pal_poly(n)};
  }
  IntPoly product = IntPoly::constant(1);
  for (const auto& f : factors) product *= f;
  if (!(product == madan_pal_poly(n))) {
    throw ConsistencyError("printed factors do not multiply to P_" + std::to_string(n));
  }
  return factors;
}

IntPoly shift_to_real_weil(const IntPoly& p) {
  return sign_normalize(compose(p, IntPoly{3, -1}));
}

namespace {

MadanPalRecord compute_record(std::uint64_t n) {
  MadanPalRecord rec;
  rec.n = n;
  rec.p_n = madan_pal_poly(n);
  rec.real_weil = shift_to_real_weil(rec.p_n);
  rec.weil = real_to_weil(rec.real_weil, kF2);
  for (const auto& f : simple_factor_list(n)) rec.simple_factors.push_back(shift_to_real_weil(f));
  rec.newton = newton_polygon(rec.weil, kF2);
  rec.ordinary = is_ordinary(rec.weil, kF2);
  return rec;
}

}  // namespace

MadanPalRecord build_record(std::uint64_t n) {
  if (n == 0) throw InvalidInput("n must be positive");
  if (n > 64) return compute_record(n);
  static std::mutex mu;
  static std::map<std::uint64_t, MadanPalRecord> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  MadanPalRecord rec = compute_record(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(rec)).first->second;
}

bool pn_at_one_check(unsigned m) {
  if (m < 2 || m > 20) throw InvalidInput("pn_at_one_check needs 2 <= m <= 20");
  const std::uint64_t n = std::uint64_t{1} << m;
  const Integer expected = ((n / 4) % 2 == 0) ? 2 : -2;
  return madan_pal_poly(n)(Integer(1)) == expected;
}

bool is_eisenstein_at_two(const IntPoly& monic) {
  if (!monic.is_monic() || monic.degree() < 1) return false;
  for (int i = 0; i < monic.degree(); ++i) {
    if (mpz_odd_p(monic.coeffs()[static_cast<std::size_t>(i)].get_mpz_t())) return false;
  }
  return !mpz_divisible_ui_p(monic.coeffs()[0].get_mpz_t(), 4);
}

bool newton_lemma_check(std::uint64_t n) {
  const MadanPalRecord rec = build_record(n);
  if (!is_power_of_two(n)) return rec.ordinary;
  unsigned log2n = 0;
  while ((std::uint64_t{1} << log2n) < n) ++log2n;
  const unsigned m = std::max(1, static_cast<int>(log2n) - 1);
  Rational lo(1, 1UL << m);
  lo.canonicalize();
  const Rational hi = 1 - lo;
  for (const auto& s : rec.newton.segments) {
    if (s.slope != lo && s.slope != hi) return false;
  }
  if (log2n >= 2 && !is_eisenstein_at_two(rec.real_weil)) return false;
  return true;
}

bool eigenvalue_resultant_identity(std::uint64_t n) {
  if (n < 3) throw InvalidInput("eigenvalue identity needs n >= 3");
  // x^2 + (y - 1) x - 2y = (x^2 - x) + (x - 2) y.
  const BivariatePoly eq{IntPoly{0, -1, 1}, IntPoly{-2, 1}};
  const IntPoly res = sign_normalize(resultant_in_y(cyclotomic_in_y(n), eq));
  return res == build_record(n).weil;
}

}  // namespace orderone
