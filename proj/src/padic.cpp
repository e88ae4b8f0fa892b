#include "orderone/padic.hpp"

#include <algorithm>
#include <utility>

#include "orderone/errors.hpp"
#include "orderone/modp.hpp"

namespace orderone {
namespace {

// ---------------------------------------------------------------------------
// Finite fields F_p[t]/(M) and polynomials over them.

using Elem = std::vector<std::uint64_t>;  // coordinates in 1, t, t^2, ...

class FiniteField {
 public:
  FiniteField(std::uint64_t p, modp::Poly modulus) : p_(p), modulus_(std::move(modulus)) {
    size_ = 1;
    for (int i = 0; i < degree(); ++i) size_ *= p_;
  }

  std::uint64_t p() const { return p_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  std::uint64_t size() const { return size_; }
  const modp::Poly& modulus() const { return modulus_; }

  Elem zero() const { return Elem(static_cast<std::size_t>(degree()), 0); }
  Elem scalar(std::uint64_t c) const {
    Elem r = zero();
    r[0] = c % p_;
    return r;
  }
  Elem from_index(std::uint64_t idx) const {
    Elem r = zero();
    for (auto& c : r) {
      c = idx % p_;
      idx /= p_;
    }
    return r;
  }
  static bool is_zero(const Elem& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    modp::Poly prod = modp::rem(modp::mul(a, b, p_), modulus_, p_);
    prod.resize(static_cast<std::size_t>(degree()), 0);
    return prod;
  }
  Elem pow(Elem base, std::uint64_t e) const {
    Elem r = scalar(1);
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem inverse(const Elem& a) const {
    if (is_zero(a)) throw ConsistencyError("inverting zero in a residue field");
    return pow(a, size_ - 2);
  }
  Elem power(const Elem& a, long e) const {
    return e >= 0 ? pow(a, static_cast<std::uint64_t>(e)) : pow(inverse(a), static_cast<std::uint64_t>(-e));
  }
  // Image of sum c_i t^i under t -> tau, tau an element of `target`.
  Elem map_into(const Elem& a, const FiniteField& target, const Elem& tau) const {
    Elem r = target.zero();
    Elem tp = target.scalar(1);
    for (std::uint64_t c : a) {
      if (c != 0) r = target.add(r, target.mul(target.scalar(c), tp));
      tp = target.mul(tp, tau);
    }
    return r;
  }

 private:
  std::uint64_t p_;
  modp::Poly modulus_;
  std::uint64_t size_;
};

using FPoly = std::vector<Elem>;  // lowest degree first

void ftrim(FPoly& f) {
  while (!f.empty() && FiniteField::is_zero(f.back())) f.pop_back();
}

FPoly fmonic(const FiniteField& F, FPoly f) {
  ftrim(f);
  const Elem inv = F.inverse(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

// Quotient of f by the monic g when g divides f.
std::optional<FPoly> fdivide(const FiniteField& F, const FPoly& f, const FPoly& g) {
  const std::size_t dg = g.size() - 1;
  if (f.size() < g.size()) return std::nullopt;
  FPoly num = f;
  FPoly q(f.size() - dg, F.zero());
  for (std::size_t i = num.size(); i-- > dg;) {
    const Elem c = num[i];
    q[i - dg] = c;
    if (FiniteField::is_zero(c)) continue;
    for (std::size_t j = 0; j <= dg; ++j) num[i - dg + j] = F.sub(num[i - dg + j], F.mul(c, g[j]));
  }
  ftrim(num);
  if (!num.empty()) return std::nullopt;
  ftrim(q);
  return q;
}

Elem feval(const FiniteField& F, const FPoly& f, const Elem& x) {
  Elem r = F.zero();
  for (std::size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
  return r;
}

struct FFactor {
  FPoly poly;  // monic irreducible
  int multiplicity;
};

// Trial division by all monic polynomials in increasing degree.
std::optional<std::vector<FFactor>> factor_over(const FiniteField& F, FPoly f) {
  f = fmonic(F, std::move(f));
  std::vector<FFactor> out;
  for (int d = 1; f.size() > 1; ++d) {
    if (static_cast<int>(f.size()) - 1 < 2 * d) {
      out.push_back({f, 1});
      break;
    }
    std::uint64_t count = 1;
    for (int k = 0; k < d; ++k) {
      if (count > kMaxResidueFieldSize / F.size()) return std::nullopt;
      count *= F.size();
    }
    for (std::uint64_t idx = 0; idx < count && static_cast<int>(f.size()) - 1 >= d; ++idx) {
      FPoly g(static_cast<std::size_t>(d) + 1);
      std::uint64_t t = idx;
      for (int k = 0; k < d; ++k, t /= F.size()) g[static_cast<std::size_t>(k)] = F.from_index(t % F.size());
      g[static_cast<std::size_t>(d)] = F.scalar(1);
      int mult = 0;
      while (auto q = fdivide(F, f, g)) {
        f = std::move(*q);
        ++mult;
      }
      if (mult > 0) out.push_back({g, mult});
    }
  }
  return out;
}

std::optional<Elem> find_root(const FiniteField& F, const FPoly& f) {
  for (std::uint64_t idx = 0; idx < F.size(); ++idx) {
    Elem x = F.from_index(idx);
    if (FiniteField::is_zero(feval(F, f, x))) return x;
  }
  return std::nullopt;
}

bool irreducible_mod_p(const modp::Poly& f, std::uint64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  // Rabin: x^(p^n) = x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for primes l | n.
  auto frob = [&](int k) {
    std::uint64_t e = 1;
    for (int i = 0; i < k; ++i) e *= p;
    modp::Poly r = modp::x_pow_mod(e, f, p);
    r.resize(std::max<std::size_t>(r.size(), 2), 0);
    r[1] = (r[1] + p - 1) % p;
    modp::trim(r);
    return r;
  };
  if (!frob(n).empty()) return false;
  for (int l = 2; l <= n; ++l) {
    bool prime = true;
    for (int d = 2; d * d <= l; ++d) prime = prime && l % d != 0;
    if (!prime || n % l != 0) continue;
    if (modp::gcd(frob(n / l), f, p).size() != 1) return false;
  }
  return true;
}

FiniteField field_of_degree(std::uint64_t p, int degree) {
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    modp::Poly f(static_cast<std::size_t>(degree) + 1, 0);
    f[static_cast<std::size_t>(degree)] = 1;
    std::uint64_t t = idx;
    for (int i = 0; i < degree; ++i, t /= p) f[static_cast<std::size_t>(i)] = t % p;
    if (f[0] != 0 && irreducible_mod_p(f, p)) return FiniteField(p, f);
  }
  throw ConsistencyError("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// Polynomials over Q.

using QPoly = std::vector<Rational>;

void qtrim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qadd(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  qtrim(a);
  return a;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qtrim(r);
  return r;
}

QPoly qpow(const QPoly& a, long e) {
  QPoly r{Rational(1)};
  for (long i = 0; i < e; ++i) r = qmul(r, a);
  return r;
}

// Coefficients of the phi-adic expansion of f, phi monic of degree >= 1.
std::vector<QPoly> expand(QPoly f, const QPoly& phi) {
  const std::size_t d = phi.size() - 1;
  std::vector<QPoly> out;
  while (!f.empty()) {
    QPoly q(f.size() > d ? f.size() - d : 0, 0);
    for (std::size_t i = f.size(); i-- > d;) {
      const Rational c = f[i];
      q[i - d] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= d; ++j) f[i - d + j] -= c * phi[j];
    }
    f.resize(std::min(f.size(), d));
    qtrim(f);
    qtrim(q);
    out.push_back(f);
    f = q;
  }
  return out;
}

Rational rat_valuation(const Rational& c, std::uint64_t p) {
  return Rational(static_cast<long>(valuation(c.get_num(), p))) - static_cast<long>(valuation(c.get_den(), p));
}

Integer p_power(std::uint64_t p, long e) { return ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(e)); }

Rational p_power_rational(std::uint64_t p, long e) {
  return e >= 0 ? Rational(p_power(p, e)) : Rational(Integer(1), p_power(p, -e));
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

// ---------------------------------------------------------------------------
// Inductive valuations.

struct Level {
  QPoly phi;
  Rational lambda;  // value of phi on the cluster
  long e;           // ramification over the previous value group
  Integer gamma_den;  // value group (1 / gamma_den) Z after this level
  int f;            // degree of z over the previous residue field
  Elem z;           // residue of phi^e / N_{e lambda}
};

struct State {
  std::uint64_t p;
  FiniteField field;
  std::vector<Level> levels;
};

Integer gamma_den(const State& s, std::size_t r) { return r == 0 ? Integer(1) : s.levels[r - 1].gamma_den; }

using Exponents = std::vector<long>;  // powers of p, phi_1, ..., phi_r

// The normalizing monomial of value gamma at level r.
Exponents normalizer(const State& s, Rational gamma, std::size_t r) {
  Exponents exps(r + 1, 0);
  for (std::size_t k = r; k >= 1; --k) {
    const Level& lv = s.levels[k - 1];
    const Integer den = gamma_den(s, k - 1);
    long a = 0;
    while (!is_integer(Rational((gamma - a * lv.lambda) * den))) {
      if (++a >= lv.e) throw ConsistencyError("value outside the value group");
    }
    exps[k] = a;
    gamma -= a * lv.lambda;
  }
  if (!is_integer(gamma)) throw ConsistencyError("value outside the value group");
  exps[0] = gamma.get_num().get_si();
  return exps;
}

Exponents add_exps(Exponents a, const Exponents& b, long scale = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  return a;
}

// Residue of a monomial of value zero.
Elem monomial_residue(const State& s, Exponents exps, std::size_t r) {
  Elem out = s.field.scalar(1);
  exps.resize(r + 1, 0);
  for (std::size_t k = r; k >= 1; --k) {
    const Level& lv = s.levels[k - 1];
    if (exps[k] % lv.e != 0) throw ConsistencyError("monomial of nonzero value");
    const long q = exps[k] / lv.e;
    exps[k] = 0;
    if (q == 0) continue;
    out = s.field.mul(out, s.field.power(lv.z, q));
    exps = add_exps(exps, normalizer(s, lv.e * lv.lambda, k - 1), q);
  }
  if (exps[0] != 0) throw ConsistencyError("monomial of nonzero value");
  return out;
}

// mu_r(a) for a nonzero polynomial a.
Rational value(const State& s, const QPoly& a, std::size_t r) {
  if (r == 0) {
    bool first = true;
    Rational best;
    for (const auto& c : a) {
      if (c == 0) continue;
      const Rational v = rat_valuation(c, s.p);
      if (first || v < best) best = v;
      first = false;
    }
    if (first) throw ConsistencyError("value of the zero polynomial");
    return best;
  }
  const Level& lv = s.levels[r - 1];
  const auto parts = expand(a, lv.phi);
  bool first = true;
  Rational best;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].empty()) continue;
    const Rational v = value(s, parts[j], r - 1) + static_cast<long>(j) * lv.lambda;
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

struct Reduction {
  Rational value;
  Elem residue;  // of a / N_value
};

// Value and residue of a nonzero a with deg a < deg phi_{r+1}.
Reduction reduce(const State& s, const QPoly& a, std::size_t r) {
  if (r == 0) {
    if (a.size() != 1 || a[0] == 0) throw ConsistencyError("reduction at level 0 needs a nonzero constant");
    const Rational v = rat_valuation(a[0], s.p);
    const Rational unit = a[0] / p_power_rational(s.p, v.get_num().get_si());
    const std::uint64_t num = modp::reduce(unit.get_num(), s.p);
    const std::uint64_t den = modp::reduce(unit.get_den(), s.p);
    return {v, s.field.scalar(modp::mul(num, modp::inverse(den, s.p), s.p))};
  }
  const Level& lv = s.levels[r - 1];
  const auto parts = expand(a, lv.phi);
  std::vector<std::pair<std::size_t, Reduction>> reds;
  bool first = true;
  Rational best;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].empty()) continue;
    Reduction red = reduce(s, parts[j], r - 1);
    const Rational v = red.value + static_cast<long>(j) * lv.lambda;
    if (first || v < best) best = v;
    first = false;
    reds.emplace_back(j, std::move(red));
  }
  const Exponents norm = normalizer(s, best, r);
  Elem residue = s.field.zero();
  for (const auto& [j, red] : reds) {
    if (red.value + static_cast<long>(j) * lv.lambda != best) continue;
    Exponents mono = normalizer(s, red.value, r - 1);
    mono.resize(r + 1, 0);
    mono[r] += static_cast<long>(j);
    mono = add_exps(mono, norm, -1);
    residue = s.field.add(residue, s.field.mul(red.residue, monomial_residue(s, mono, r)));
  }
  if (FiniteField::is_zero(residue)) throw ConsistencyError("vanishing residue below a key polynomial");
  return {best, residue};
}

// Coordinates over F_p of x in the basis of monomials z_1^i_1 ... z_r^i_r.
std::vector<Elem> residue_basis(const State& s, std::size_t r) {
  std::vector<Elem> basis{s.field.scalar(1)};
  for (std::size_t k = 1; k <= r; ++k) {
    const Level& lv = s.levels[k - 1];
    std::vector<Elem> next;
    Elem zp = s.field.scalar(1);
    for (int t = 0; t < lv.f; ++t) {
      for (const auto& b : basis) next.push_back(s.field.mul(b, zp));
      zp = s.field.mul(zp, lv.z);
    }
    basis = std::move(next);
  }
  return basis;
}

// x = sum_t c_t z_r^t with c_t in F_p(z_1, ..., z_{r-1}).
std::vector<Elem> split_by_top_generator(const State& s, const Elem& x, std::size_t r) {
  const std::vector<Elem> lower = residue_basis(s, r - 1);
  const Level& lv = s.levels[r - 1];
  std::vector<Elem> columns;
  Elem zp = s.field.scalar(1);
  for (int t = 0; t < lv.f; ++t) {
    for (const auto& b : lower) columns.push_back(s.field.mul(b, zp));
    zp = s.field.mul(zp, lv.z);
  }
  const std::uint64_t p = s.p;
  const std::size_t rows = static_cast<std::size_t>(s.field.degree());
  const std::size_t cols = columns.size();
  // Augmented matrix [columns | x] over F_p.
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols + 1, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = columns[j][i];
    m[i][cols] = x[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const std::uint64_t inv = modp::inverse(m[row][col], p);
    for (auto& v : m[row]) v = modp::mul(v, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const std::uint64_t c = m[i][col];
      for (std::size_t j = 0; j <= cols; ++j) m[i][j] = (m[i][j] + p - modp::mul(c, m[row][j], p)) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (m[i][cols] != 0) throw ConsistencyError("residue outside the expected subfield");
  }
  std::vector<std::uint64_t> coords(cols, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) coords[pivot_col[i]] = m[i][cols];
  std::vector<Elem> out(static_cast<std::size_t>(lv.f), s.field.zero());
  for (std::size_t j = 0; j < cols; ++j) {
    if (coords[j] == 0) continue;
    const std::size_t t = j / lower.size();
    out[t] = s.field.add(out[t], s.field.mul(s.field.scalar(coords[j]), lower[j % lower.size()]));
  }
  return out;
}

// A polynomial of degree < deg phi_{r+1} with value gamma and residue rho.
QPoly lift(const State& s, const Elem& rho, const Rational& gamma, std::size_t r) {
  if (r == 0) {
    for (std::size_t i = 1; i < rho.size(); ++i) {
      if (rho[i] != 0) throw ConsistencyError("lifting a residue outside the prime field");
    }
    if (!is_integer(gamma)) throw ConsistencyError("lifting a non-integral value at level 0");
    return QPoly{Rational(static_cast<unsigned long>(rho[0])) * p_power_rational(s.p, gamma.get_num().get_si())};
  }
  const Level& lv = s.levels[r - 1];
  const Exponents norm = normalizer(s, gamma, r);
  const std::vector<Elem> parts = split_by_top_generator(s, rho, r);
  QPoly out;
  for (int t = 0; t < lv.f; ++t) {
    const Elem& c = parts[static_cast<std::size_t>(t)];
    if (FiniteField::is_zero(c)) continue;
    const long j = norm[r] + t * lv.e;
    const Rational gj = gamma - j * lv.lambda;
    Exponents mono = normalizer(s, gj, r - 1);
    mono.resize(r + 1, 0);
    mono[r] += j;
    mono = add_exps(mono, norm, -1);
    // monomial residue = z_r^t * w with w in the lower field
    const Elem w = s.field.mul(monomial_residue(s, mono, r), s.field.power(lv.z, -t));
    const QPoly b = lift(s, s.field.mul(c, s.field.inverse(w)), gj, r - 1);
    out = qadd(out, qmul(b, qpow(lv.phi, j)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The MacLane recursion.

constexpr std::size_t kMaxLevels = 40;

struct LowerHullPoint {
  long x;
  Rational y;
};

std::vector<LowerHullPoint> lower_hull(const std::vector<LowerHullPoint>& pts) {
  std::vector<LowerHullPoint> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const Rational cross = Rational(a.x - o.x) * (pt.y - o.y) - (a.y - o.y) * Rational(pt.x - o.x);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  return hull;
}

// Irreducible factors whose roots lie in the cluster described by s, using
// the key polynomial phi; `expected` is the length of the principal part.
bool analyze(const State& s, const QPoly& h, const QPoly& phi, long expected, const Rational* root_valuation,
             std::vector<PadicFactor>& out) {
  const std::size_t r = s.levels.size();
  if (r > kMaxLevels) throw CapacityError("MacLane recursion too deep");
  const auto parts = expand(h, phi);
  std::vector<LowerHullPoint> pts;
  std::vector<Rational> vals(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    vals[i] = value(s, parts[i], r);
    pts.push_back({static_cast<long>(i), vals[i]});
  }
  const auto hull = lower_hull(pts);
  const Rational threshold = r == 0 ? Rational(-1) : value(s, phi, r);
  const long phi_degree = static_cast<long>(phi.size()) - 1;
  long principal = 0;
  // phi itself divides h: an irreducible factor with infinite slope.
  if (parts.front().empty()) {
    if (r == 0 || (parts.size() > 1 && parts[1].empty())) throw ConsistencyError("key polynomial divides h repeatedly");
    out.push_back({*root_valuation, static_cast<int>(phi.size()) - 1});
    principal = 1;
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const long sidx = hull[k].x;
    const long len = hull[k + 1].x - sidx;
    Rational lambda = (hull[k].y - hull[k + 1].y) / len;
    lambda.canonicalize();
    if (lambda <= threshold) break;
    principal += len;
    const Integer den = gamma_den(s, r);
    long e = 1;
    while (!is_integer(Rational(lambda * e * den))) ++e;
    const Rational line0 = vals[static_cast<std::size_t>(sidx)] + sidx * lambda;
    const Exponents n_step = normalizer(s, e * lambda, r);
    const Exponents n_start = normalizer(s, vals[static_cast<std::size_t>(sidx)], r);
    FPoly residual(static_cast<std::size_t>(len / e) + 1, s.field.zero());
    for (long j = 0; j <= len / e; ++j) {
      const std::size_t i = static_cast<std::size_t>(sidx + j * e);
      if (parts[i].empty() || vals[i] + static_cast<long>(i) * lambda != line0) continue;
      const Reduction red = reduce(s, parts[i], r);
      Exponents mono = add_exps(normalizer(s, red.value, r), n_step, j);
      mono = add_exps(mono, n_start, -1);
      residual[static_cast<std::size_t>(j)] = s.field.mul(red.residue, monomial_residue(s, mono, r));
    }
    const auto factors = factor_over(s.field, residual);
    if (!factors) return false;
    const Rational& v0 = root_valuation ? *root_valuation : lambda;
    for (const auto& [psi, mult] : *factors) {
      const int f = static_cast<int>(psi.size()) - 1;
      const long place_degree = phi_degree * e * f;
      if (mult == 1) {
        out.push_back({v0, static_cast<int>(place_degree)});
        continue;
      }
      // Adjoin a root z of psi and refine with a new key polynomial.
      State next = s;
      FPoly psi_next = psi;
      Elem z;
      if (f == 1) {
        z = s.field.sub(s.field.zero(), psi[0]);
      } else {
        const int degree = s.field.degree() * f;
        std::uint64_t size = 1;
        for (int i = 0; i < degree; ++i) {
          if (size > kMaxResidueFieldSize / s.p) return false;
          size *= s.p;
        }
        FiniteField big = field_of_degree(s.p, degree);
        modp::Poly old_mod = s.field.modulus();
        FPoly old_mod_big;
        for (std::uint64_t c : old_mod) old_mod_big.push_back(big.scalar(c));
        const auto tau = find_root(big, old_mod_big);
        if (!tau) throw ConsistencyError("residue field embedding not found");
        for (auto& lv : next.levels) lv.z = s.field.map_into(lv.z, big, *tau);
        for (auto& c : psi_next) c = s.field.map_into(c, big, *tau);
        next.field = big;
        const auto root = find_root(big, psi_next);
        if (!root) throw ConsistencyError("root of an irreducible residual factor not found");
        z = *root;
      }
      next.levels.push_back({phi, lambda, e, den * e, f, z});
      // phi' = sum_j A_j phi^(j e) with residual polynomial psi.
      const Exponents n_full = normalizer(next, f * e * lambda, r);
      const Elem kappa = monomial_residue(next, add_exps(add_exps({}, n_step, f), n_full, -1), r);
      QPoly key;
      for (int j = 0; j <= f; ++j) {
        const Elem& c = psi_next[static_cast<std::size_t>(j)];
        if (FiniteField::is_zero(c)) continue;
        QPoly a;
        if (j == f) {
          a = QPoly{Rational(1)};
        } else {
          const Rational gj = (f - j) * e * lambda;
          Exponents mono = add_exps(add_exps(normalizer(next, gj, r), n_step, j), n_full, -1);
          const Elem target = next.field.mul(next.field.mul(c, kappa),
                                             next.field.inverse(monomial_residue(next, mono, r)));
          a = lift(next, target, gj, r);
        }
        key = qadd(key, qmul(a, qpow(phi, static_cast<long>(j) * e)));
      }
      std::vector<PadicFactor> inner;
      if (!analyze(next, h, key, mult, &v0, inner)) return false;
      long total = 0;
      for (const auto& pf : inner) total += pf.degree;
      if (total != mult * place_degree) throw ConsistencyError("cluster size mismatch in MacLane refinement");
      out.insert(out.end(), inner.begin(), inner.end());
    }
  }
  if (r > 0 && principal != expected) throw ConsistencyError("principal part has unexpected length");
  return true;
}

}  // namespace

std::optional<std::vector<PadicFactor>> padic_factor_degrees(const IntPoly& h, std::uint64_t p) {
  if (!h.is_monic() || h.degree() < 1) throw InvalidInput("p-adic factorization needs a monic polynomial");
  if (h.coeffs().front() == 0) throw InvalidInput("p-adic factorization needs h(0) != 0");
  if (radical(h).degree() != h.degree()) throw InvalidInput("p-adic factorization needs a squarefree polynomial");
  QPoly hq;
  for (const auto& c : h.coeffs()) hq.emplace_back(c);
  const State s{p, FiniteField(p, modp::Poly{0, 1}), {}};
  std::vector<PadicFactor> out;
  if (!analyze(s, hq, QPoly{Rational(0), Rational(1)}, h.degree(), nullptr, out)) return std::nullopt;
  int total = 0;
  for (const auto& f : out) total += f.degree;
  if (total != h.degree()) throw ConsistencyError("p-adic factor degrees do not add up");
  std::sort(out.begin(), out.end(), [](const PadicFactor& a, const PadicFactor& b) {
    return a.valuation != b.valuation ? a.valuation < b.valuation : a.degree < b.degree;
  });
  return out;
}

}  // namespace orderone
