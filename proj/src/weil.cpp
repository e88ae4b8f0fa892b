#include "orderone/weil.hpp"

#include <algorithm>
#include <numeric>

#include "orderone/errors.hpp"
#include "orderone/modp.hpp"
#include "orderone/padic.hpp"

namespace orderone {

WeilContext WeilContext::from_q(std::uint64_t q) {
  if (q < 2) throw InvalidInput("q must be a prime power >= 2");
  const auto f = factorize(q);
  if (f.size() != 1) throw InvalidInput("q must be a prime power, got " + std::to_string(q));
  return WeilContext{f[0].first, f[0].second};
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

SturmSequence::SturmSequence(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("Sturm sequence of the zero polynomial");
  // Dividing by the positive content keeps every sign intact.
  auto reduce = [](const IntPoly& p) { return p.is_zero() ? p : divide_exact(p, content(p)); };
  seq_.push_back(reduce(f));
  if (f.degree() == 0) return;
  seq_.push_back(reduce(derivative(f)));
  while (seq_.back().degree() > 0) {
    const IntPoly& a = seq_[seq_.size() - 2];
    const IntPoly& b = seq_.back();
    IntPoly r = pseudo_divide(a, b).remainder;
    // prem multiplies by lc(b)^(delta+1); undo a negative factor.
    const int power = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && power % 2 == 1) r = -r;
    if (r.is_zero()) break;
    seq_.push_back(reduce(-r));
  }
}

int SturmSequence::variations_at(const Integer& x) const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(sgn(p(x)));
  return sign_variations(s);
}

int SturmSequence::variations_at_surd(const Integer& scale, const Integer& d) const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(sign(evaluate_at_surd(p, scale, d), d));
  return sign_variations(s);
}

int SturmSequence::variations_at_infinity(bool positive) const {
  std::vector<int> s;
  for (const auto& p : seq_) {
    int v = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) v = -v;
    s.push_back(v);
  }
  return sign_variations(s);
}

int SturmSequence::count_real_roots() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

IntPoly real_to_weil(const IntPoly& r, const WeilContext& ctx) {
  if (r.is_zero()) throw InvalidInput("real_to_weil of zero");
  const int d = r.degree();
  const IntPoly x2q(std::vector<Integer>{ctx.q(), 0, 1});  // x^2 + q
  IntPoly out;
  IntPoly power = IntPoly::constant(1);
  for (int k = 0; k <= d; ++k) {
    const Integer& c = r.coeffs()[static_cast<std::size_t>(k)];
    if (c != 0) out += IntPoly::monomial(c, static_cast<std::size_t>(d - k)) * power;
    power *= x2q;
  }
  return out;
}

bool is_real_weil(const IntPoly& r, const WeilContext& ctx) {
  if (r.is_zero()) throw InvalidInput("is_real_weil of zero");
  const IntPoly s = radical(r);
  if (s.degree() == 0) return true;
  const SturmSequence sturm(s);
  const Integer q = ctx.q();
  // Roots in (-2 sqrt q, 2 sqrt q], plus the left endpoint when it is a root.
  int inside = sturm.variations_at_surd(-2, q) - sturm.variations_at_surd(2, q);
  if (sign(evaluate_at_surd(s, -2, q), q) == 0) ++inside;
  return inside == s.degree();
}

NewtonPolygon newton_polygon(const IntPoly& f, const WeilContext& ctx) {
  if (f.is_zero()) throw InvalidInput("Newton polygon of zero");
  if (f.coeffs().front() == 0) throw InvalidInput("Newton polygon requires a nonzero constant term");
  struct Point {
    Rational x;
    Rational y;
  };
  std::vector<Point> hull;
  for (int i = 0; i <= f.degree(); ++i) {
    const Integer& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Point p{Rational(i), Rational(valuation(c, ctx.p), ctx.a)};
    p.y.canonicalize();
    while (hull.size() >= 2) {
      const Point& o = hull[hull.size() - 2];
      const Point& a = hull.back();
      const Rational cross = (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  NewtonPolygon np;
  for (std::size_t k = hull.size() - 1; k > 0; --k) {
    const Point& a = hull[k - 1];
    const Point& b = hull[k];
    Rational slope = (a.y - b.y) / (b.x - a.x);
    slope.canonicalize();
    const Rational width = b.x - a.x;
    np.segments.push_back({slope, static_cast<int>(width.get_num().get_si())});
  }
  return np;
}

bool is_ordinary(const IntPoly& f, const WeilContext& ctx) {
  for (const auto& s : newton_polygon(f, ctx).segments) {
    if (s.slope != 0 && s.slope != 1) return false;
  }
  return true;
}

std::vector<Integer> power_sums(const IntPoly& monic, std::size_t count) {
  if (!monic.is_monic()) throw InvalidInput("power sums need a monic polynomial");
  const std::size_t d = static_cast<std::size_t>(monic.degree());
  // c[j] is the coefficient of x^(d-j).
  std::vector<Integer> c(d + 1);
  for (std::size_t j = 0; j <= d; ++j) c[j] = monic.coeffs()[d - j];
  std::vector<Integer> p(count + 1);
  for (std::size_t k = 1; k <= count; ++k) {
    Integer acc = 0;
    const std::size_t top = std::min(k - 1, d);
    for (std::size_t j = 1; j <= top; ++j) {
      mpz_addmul(acc.get_mpz_t(), c[j].get_mpz_t(), p[k - j].get_mpz_t());
    }
    if (k <= d) acc += Integer(static_cast<unsigned long>(k)) * c[k];
    p[k] = -acc;
  }
  p.erase(p.begin());
  return p;
}

IntPoly from_power_sums(const std::vector<Integer>& sums) {
  const std::size_t d = sums.size();
  // e[k]: elementary symmetric functions, k e_k = sum (-1)^(i-1) e_{k-i} p_i.
  std::vector<Integer> e(d + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (i % 2 == 1) {
        mpz_addmul(acc.get_mpz_t(), e[k - i].get_mpz_t(), sums[i - 1].get_mpz_t());
      } else {
        mpz_submul(acc.get_mpz_t(), e[k - i].get_mpz_t(), sums[i - 1].get_mpz_t());
      }
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), k)) {
      throw InexactDivision("power sums do not come from an integer polynomial");
    }
    mpz_divexact_ui(e[k].get_mpz_t(), acc.get_mpz_t(), k);
  }
  std::vector<Integer> coeffs(d + 1);
  for (std::size_t k = 0; k <= d; ++k) coeffs[d - k] = (k % 2 == 0) ? e[k] : Integer(-e[k]);
  return IntPoly(std::move(coeffs));
}

IntPoly base_extension_power_sums(const IntPoly& q_poly, std::uint64_t n) {
  if (n == 0) throw InvalidInput("base extension degree must be positive");
  const std::size_t d = static_cast<std::size_t>(q_poly.degree());
  const std::vector<Integer> p = power_sums(q_poly, d * n);
  std::vector<Integer> sub(d);
  for (std::size_t k = 1; k <= d; ++k) sub[k - 1] = p[k * n - 1];
  return from_power_sums(sub);
}

IntPoly base_extension_resultant(const IntPoly& q_poly, std::uint64_t n) {
  if (n == 0) throw InvalidInput("base extension degree must be positive");
  if (!q_poly.is_monic()) throw InvalidInput("base extension needs a monic polynomial");
  BivariatePoly f;
  for (const auto& c : q_poly.coeffs()) f.push_back(IntPoly::constant(c));
  BivariatePoly g(static_cast<std::size_t>(n) + 1);
  g[0] = IntPoly{0, -1};
  g[n] = IntPoly::constant(1);
  return sign_normalize(resultant_in_y(f, g));
}

IntPoly base_extension(const IntPoly& q_poly, std::uint64_t n) {
  if (!q_poly.is_monic()) throw InvalidInput("base extension needs a monic polynomial");
  if (n == 1) return q_poly;
  return n <= 8 ? base_extension_resultant(q_poly, n) : base_extension_power_sums(q_poly, n);
}

std::optional<int> functional_equation_sign(const IntPoly& q_poly, const WeilContext& ctx) {
  const int deg = q_poly.degree();
  if (deg < 0 || deg % 2 != 0) throw InvalidInput("functional equation needs even degree");
  const unsigned long g = static_cast<unsigned long>(deg / 2);
  const Integer q = ctx.q();
  bool plus = true;
  bool minus = true;
  // q^g a_{2g-i} = sign * q^i a_i
  for (int i = 0; i <= deg; ++i) {
    const Integer lhs = ipow(q, g) * q_poly.coeff(static_cast<std::size_t>(deg - i));
    const Integer rhs = ipow(q, static_cast<unsigned long>(i)) * q_poly.coeff(static_cast<std::size_t>(i));
    plus = plus && lhs == rhs;
    minus = minus && lhs == -rhs;
  }
  if (plus) return 1;
  if (minus) return -1;
  return std::nullopt;
}

bool ratio_root_of_unity_free(const IntPoly& q_poly, const std::vector<std::uint64_t>& orders) {
  for (std::uint64_t m : orders) {
    if (radical(base_extension(q_poly, m)).degree() != q_poly.degree()) return false;
  }
  return true;
}

bool np_forces_geom_simple(const IntPoly& f, const WeilContext& ctx) {
  if (f.degree() % 2 != 0) return false;
  const int g = f.degree() / 2;
  if (g <= 2) return false;
  const NewtonPolygon np = newton_polygon(f, ctx);
  const NewtonPolygon expected{{{Rational(1, g), g}, {Rational(g - 1, g), g}}};
  return np == expected;
}

bool hondatate_irreducibility_over_Fp(const IntPoly& q_poly, const WeilContext& ctx) {
  if (ctx.a != 1) throw InvalidInput("Honda-Tate predicate is implemented for q = p only");
  const IntPoly exceptional{-static_cast<long>(ctx.p), 0, 1};
  return !(q_poly == exceptional);
}

namespace {

bool has_real_root(const IntPoly& h, const Integer& q) {
  for (int s : {1, -1}) {
    if (sign(evaluate_at_surd(h, s, q), q) == 0) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<LocalPlace>> places_above_p(const IntPoly& h, const WeilContext& ctx) {
  const auto factors = padic_factor_degrees(h, ctx.p);
  if (!factors) return std::nullopt;
  std::vector<LocalPlace> places;
  for (const auto& f : *factors) {
    Rational slope = f.valuation / static_cast<long>(ctx.a);
    slope.canonicalize();
    places.push_back({slope, f.degree});
  }
  return places;
}

std::optional<int> honda_tate_exponent(const IntPoly& h, const WeilContext& ctx) {
  const auto places = places_above_p(h, ctx);
  if (!places) return std::nullopt;
  Integer e = has_real_root(h, ctx.q()) ? 2 : 1;
  for (const auto& v : *places) {
    Rational inv = v.slope * v.degree;
    inv.canonicalize();
    mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), inv.get_den_mpz_t());
  }
  return static_cast<int>(e.get_si());
}

int honda_tate_exponent_lower_bound(const IntPoly& h, const WeilContext& ctx) {
  Integer e = has_real_root(h, ctx.q()) ? 2 : 1;
  for (const auto& s : newton_polygon(h, ctx).segments) {
    Rational height = s.slope * s.multiplicity;
    height.canonicalize();
    mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), height.get_den_mpz_t());
  }
  return static_cast<int>(e.get_si());
}

}  // namespace orderone
