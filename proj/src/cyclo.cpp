#include "orderone/cyclo.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "orderone/errors.hpp"

namespace orderone {

namespace {

std::mutex& cyclo_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, IntPoly>& cyclo_cache() {
  static std::map<std::uint64_t, IntPoly> cache;
  return cache;
}

IntPoly compute_cyclotomic(std::uint64_t n) {
  // x^n - 1 over the product of Phi_d for the proper divisors d.
  IntPoly num = IntPoly::monomial(1, n) - IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    den *= cyclotomic_poly(d);
  }
  return divide_exact(num, den);
}

// Remainder of c (arbitrary length) modulo the monic polynomial m.
std::vector<Integer> monic_remainder(std::vector<Integer> c, const IntPoly& m) {
  const std::size_t d = static_cast<std::size_t>(m.degree());
  const auto& mc = m.coeffs();
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    const Integer t = c[i];
    for (std::size_t j = 0; j <= d; ++j) {
      mpz_submul(c[i - d + j].get_mpz_t(), t.get_mpz_t(), mc[j].get_mpz_t());
    }
  }
  if (c.size() > d) c.resize(d);
  return c;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

const IntPoly& cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw InvalidInput("cyclotomic polynomial index must be positive");
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex());
    auto it = cyclo_cache().find(n);
    if (it != cyclo_cache().end()) return it->second;
  }
  IntPoly phi = n == 1 ? IntPoly{-1, 1} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(cyclo_mutex());
  // std::map never invalidates references on insert.
  return cyclo_cache().emplace(n, std::move(phi)).first->second;
}

CycInt::CycInt(std::int64_t level) : level_(level) {
  if (level <= 0) throw InvalidInput("cyclotomic level must be positive");
  coeffs_.assign(static_cast<std::size_t>(level), Integer(0));
}

CycInt::CycInt(std::int64_t level, std::vector<Integer> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  if (level <= 0) throw InvalidInput("cyclotomic level must be positive");
  if (coeffs_.size() != static_cast<std::size_t>(level)) {
    throw InvalidInput("cyclotomic integer needs exactly `level` coefficients");
  }
}

CycInt CycInt::from_integer(const Integer& c, std::int64_t level) {
  CycInt v(level);
  v.coeffs_[0] = c;
  return v;
}

CycInt CycInt::from_root(const RootOfUnity& r, const Integer& coeff, std::int64_t level) {
  if (level == 0) level = r.order();
  CycInt v(level);
  v.coeffs_[static_cast<std::size_t>(r.exponent_at(level))] = coeff;
  return v;
}

CycInt CycInt::embed(std::int64_t new_level) const {
  if (new_level <= 0 || new_level % level_ != 0) {
    throw InvalidInput("embedding level must be a multiple of the current level");
  }
  const std::int64_t k = new_level / level_;
  CycInt v(new_level);
  for (std::int64_t i = 0; i < level_; ++i) {
    v.coeffs_[static_cast<std::size_t>(i * k)] = coeffs_[static_cast<std::size_t>(i)];
  }
  return v;
}

void CycInt::add_term(std::int64_t k, const Integer& coeff) {
  coeffs_[static_cast<std::size_t>(mod(k, level_))] += coeff;
}

IntPoly CycInt::power_basis() const {
  return IntPoly(monic_remainder(coeffs_, cyclotomic_poly(static_cast<std::uint64_t>(level_))));
}

namespace {

std::int64_t common_level(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(
      checked_lcm(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)));
}

}  // namespace

CycInt& CycInt::operator+=(const CycInt& other) {
  const std::int64_t l = common_level(level_, other.level_);
  if (l != level_) *this = embed(l);
  const std::int64_t k = l / other.level_;
  for (std::int64_t i = 0; i < other.level_; ++i) {
    coeffs_[static_cast<std::size_t>(i * k)] += other.coeffs_[static_cast<std::size_t>(i)];
  }
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  const std::int64_t l = common_level(level_, other.level_);
  if (l != level_) *this = embed(l);
  const std::int64_t k = l / other.level_;
  for (std::int64_t i = 0; i < other.level_; ++i) {
    coeffs_[static_cast<std::size_t>(i * k)] -= other.coeffs_[static_cast<std::size_t>(i)];
  }
  return *this;
}

CycInt operator*(const CycInt& a_in, const CycInt& b_in) {
  const std::int64_t l = common_level(a_in.level_, b_in.level_);
  const CycInt a = a_in.embed(l);
  const CycInt b = b_in.embed(l);
  CycInt out(l);
  for (std::int64_t i = 0; i < l; ++i) {
    const Integer& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (std::int64_t j = 0; j < l; ++j) {
      const Integer& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      mpz_addmul(out.coeffs_[static_cast<std::size_t>((i + j) % l)].get_mpz_t(),
                 ai.get_mpz_t(), bj.get_mpz_t());
    }
  }
  return out;
}

CycInt operator*(const CycInt& a_in, const RootOfUnity& r) {
  const std::int64_t l = common_level(a_in.level_, r.order());
  const CycInt a = a_in.embed(l);
  const std::int64_t shift = r.exponent_at(l);
  CycInt out(l);
  for (std::int64_t i = 0; i < l; ++i) {
    out.coeffs_[static_cast<std::size_t>((i + shift) % l)] = a.coeffs_[static_cast<std::size_t>(i)];
  }
  return out;
}

CycInt operator-(const CycInt& a) {
  CycInt out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CycInt& a, const CycInt& b) { return is_zero(a - b); }

bool is_zero(const CycInt& v) { return v.power_basis().is_zero(); }

bool is_even(const CycInt& v) {
  const IntPoly reduced = v.power_basis();
  for (const auto& c : reduced.coeffs()) {
    if (mpz_odd_p(c.get_mpz_t())) return false;
  }
  return true;
}

CycInt conjugate(const CycInt& v) {
  const std::int64_t n = v.level();
  std::vector<Integer> out(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(mod(-i, n))] = v.coeffs()[static_cast<std::size_t>(i)];
  }
  return CycInt(n, std::move(out));
}

IntPoly reduce_mod_cyclotomic(const IntPoly& f, std::uint64_t n) {
  return IntPoly(monic_remainder(f.coeffs(), cyclotomic_poly(n)));
}

PowerBasisTable::PowerBasisTable(std::int64_t level) : level_(level) {
  if (level <= 0) throw InvalidInput("power basis level must be positive");
  const IntPoly& phi = cyclotomic_poly(static_cast<std::uint64_t>(level));
  dim_ = phi.degree();
  std::vector<std::int64_t> m(static_cast<std::size_t>(dim_));
  for (int j = 0; j < dim_; ++j) {
    const Integer& c = phi.coeffs()[static_cast<std::size_t>(j)];
    if (!c.fits_slong_p()) throw CapacityError("cyclotomic coefficient exceeds int64");
    m[static_cast<std::size_t>(j)] = c.get_si();
  }
  data_.assign(static_cast<std::size_t>(level) * static_cast<std::size_t>(dim_), 0);
  std::vector<std::int64_t> cur(static_cast<std::size_t>(dim_), 0);
  cur[0] = 1;
  for (std::int64_t k = 0; k < level; ++k) {
    for (int j = 0; j < dim_; ++j) {
      data_[static_cast<std::size_t>(k) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j)] =
          cur[static_cast<std::size_t>(j)];
      const std::int64_t a = cur[static_cast<std::size_t>(j)] < 0 ? -cur[static_cast<std::size_t>(j)]
                                                                  : cur[static_cast<std::size_t>(j)];
      if (a > max_abs_) max_abs_ = a;
    }
    // cur <- x * cur mod phi
    const std::int64_t top = cur[static_cast<std::size_t>(dim_ - 1)];
    for (int j = dim_ - 1; j > 0; --j) {
      std::int64_t prod = 0;
      std::int64_t next = 0;
      if (__builtin_mul_overflow(top, m[static_cast<std::size_t>(j)], &prod) ||
          __builtin_sub_overflow(cur[static_cast<std::size_t>(j - 1)], prod, &next)) {
        throw CapacityError("power basis entry exceeds int64");
      }
      cur[static_cast<std::size_t>(j)] = next;
    }
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(top, m[0], &prod)) throw CapacityError("power basis entry exceeds int64");
    cur[0] = -prod;
  }
}

}  // namespace orderone
