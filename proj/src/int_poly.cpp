#include "orderone/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "orderone/errors.hpp"

namespace orderone {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rational IntPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly derivative(const IntPoly& f) {
  if (f.degree() <= 0) return {};
  std::vector<Integer> out(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) out[i - 1] = f.coeffs()[i] * Integer(i);
  return IntPoly(std::move(out));
}

IntPoly pow(const IntPoly& f, unsigned k) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = f;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
  IntPoly acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * g + IntPoly::constant(*it);
  }
  return acc;
}

IntPoly taylor_shift(const IntPoly& f, const Integer& shift) {
  // In-place synthetic division scheme, O(d^2) additions.
  std::vector<Integer> c = f.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      mpz_addmul(c[j - 1].get_mpz_t(), c[j].get_mpz_t(), shift.get_mpz_t());
    }
  }
  return IntPoly(std::move(c));
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly divide_exact(const IntPoly& f, const Integer& d) {
  if (d == 0) throw InexactDivision("division by zero");
  std::vector<Integer> out = f.coeffs();
  for (auto& c : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw InexactDivision("coefficient not divisible by scalar");
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  return divide_exact(f, c);
}

IntPoly sign_normalize(const IntPoly& f) {
  if (!f.is_zero() && f.leading() < 0) return -f;
  return f;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InexactDivision("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InexactDivision("degree of divisor exceeds dividend");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Integer& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw InexactDivision("leading coefficient does not divide");
    }
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), t.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    q[static_cast<std::size_t>(k)] = std::move(t);
  }
  for (const auto& c : rem) {
    if (c != 0) throw InexactDivision("nonzero remainder");
  }
  return IntPoly(std::move(q));
}

PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("pseudo-division by zero");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  const int da = a.degree();
  const int db = b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  for (int k = da - db; k >= 0; --k) {
    // Multiply everything so far by lb, then cancel the top coefficient.
    Integer t = r[static_cast<std::size_t>(k + db)];
    for (auto& c : q) c *= lb;
    q[static_cast<std::size_t>(k)] = t;
    for (int i = 0; i < k + db; ++i) r[static_cast<std::size_t>(i)] *= lb;
    r[static_cast<std::size_t>(k + db)] = 0;
    for (int j = 0; j < db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), t.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(k + db));
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero()) return primitive_part(b_in);
  if (b_in.is_zero()) return primitive_part(a_in);
  IntPoly a = primitive_part(a_in);
  IntPoly b = primitive_part(b_in);
  if (a.degree() < b.degree()) std::swap(a, b);
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    IntPoly r = pseudo_divide(a, b).remainder;
    if (r.is_zero()) return primitive_part(b);
    if (r.degree() == 0) return IntPoly::constant(1);
    a = std::move(b);
    b = divide_exact(r, g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntPoly a = a_in;
  IntPoly b = b_in;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -1;
  }
  if (b.degree() == 0) {
    return s * ipow(b.leading(), static_cast<unsigned long>(a.degree()));
  }
  const Integer ca = content(a);
  const Integer cb = content(b);
  Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) *
              ipow(cb, static_cast<unsigned long>(a.degree()));
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    IntPoly r = pseudo_divide(a, b).remainder;
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_exact(r, g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() <= 0) break;
  }
  // h <- h^(1 - deg a) * lc(b)^(deg a)
  const unsigned long da = static_cast<unsigned long>(a.degree());
  Integer num = ipow(b.leading(), da);
  if (da >= 1) {
    Integer den = ipow(h, da - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    h = num;
  }
  return s * t * h;
}

IntPoly radical(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("radical of zero polynomial");
  if (f.degree() == 0) return IntPoly::constant(1);
  IntPoly g = gcd(f, derivative(f));
  return primitive_part(divide_exact(primitive_part(f), g));
}

IntPoly exact_sqrt(const IntPoly& f) {
  if (f.is_zero()) return {};
  if (f.degree() % 2 != 0) throw InexactDivision("odd degree is not a square");
  if (f.leading() < 0 || !mpz_perfect_square_p(f.leading().get_mpz_t())) {
    throw InexactDivision("leading coefficient is not a square");
  }
  const int d = f.degree() / 2;
  std::vector<Integer> g(static_cast<std::size_t>(d + 1));
  mpz_sqrt(g[static_cast<std::size_t>(d)].get_mpz_t(), f.leading().get_mpz_t());
  const Integer two_lead = 2 * g[static_cast<std::size_t>(d)];
  for (int k = d - 1; k >= 0; --k) {
    Integer acc = f.coeff(static_cast<std::size_t>(d + k));
    for (int i = k + 1; i < d; ++i) {
      const int j = d + k - i;
      if (j <= k || j >= d) continue;
      mpz_submul(acc.get_mpz_t(), g[static_cast<std::size_t>(i)].get_mpz_t(),
                 g[static_cast<std::size_t>(j)].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), two_lead.get_mpz_t())) {
      throw InexactDivision("not a square in Z[x]");
    }
    mpz_divexact(g[static_cast<std::size_t>(k)].get_mpz_t(), acc.get_mpz_t(),
                 two_lead.get_mpz_t());
  }
  IntPoly root(std::move(g));
  if (!(root * root == f)) throw InexactDivision("not a square in Z[x]");
  return root;
}

IntPoly interpolate_consecutive(const std::vector<Integer>& values, long start) {
  // Forward differences give the coefficients in the falling factorial basis.
  std::vector<Integer> diff = values;
  const std::size_t n = values.size();
  IntPoly result;
  IntPoly falling = IntPoly::constant(1);
  Integer factorial = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      for (std::size_t j = n - 1; j >= k; --j) diff[j] -= diff[j - 1];
      falling *= IntPoly{-static_cast<long>(k - 1), 1};
      factorial *= Integer(static_cast<unsigned long>(k));
    }
    const Integer& dk = diff[k];
    if (dk == 0) continue;
    if (!mpz_divisible_p(dk.get_mpz_t(), factorial.get_mpz_t())) {
      throw InexactDivision("sample values do not come from an integer polynomial");
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), dk.get_mpz_t(), factorial.get_mpz_t());
    result += falling * c;
  }
  return taylor_shift(result, Integer(-start));
}

namespace {

int max_x_degree(const BivariatePoly& f) {
  int d = -1;
  for (const auto& c : f) d = std::max(d, c.degree());
  return d;
}

BivariatePoly trimmed(BivariatePoly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

IntPoly specialize(const BivariatePoly& f, const Integer& x0) {
  std::vector<Integer> c;
  c.reserve(f.size());
  for (const auto& p : f) c.push_back(p(x0));
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly resultant_in_y(const BivariatePoly& f_in, const BivariatePoly& g_in) {
  const BivariatePoly f = trimmed(f_in);
  const BivariatePoly g = trimmed(g_in);
  if (f.empty() || g.empty()) return {};
  const int df = static_cast<int>(f.size()) - 1;
  const int dg = static_cast<int>(g.size()) - 1;
  const long bound = static_cast<long>(df) * std::max(0, max_x_degree(g)) +
                     static_cast<long>(dg) * std::max(0, max_x_degree(f));
  const std::size_t points = static_cast<std::size_t>(bound + 1);
  const IntPoly& lf = f.back();
  const IntPoly& lg = g.back();
  long start = 0;
  std::vector<Integer> values;
  values.reserve(points);
  while (values.size() < points) {
    const Integer x0(start + static_cast<long>(values.size()));
    if (lf(x0) == 0 || lg(x0) == 0) {
      start = start + static_cast<long>(values.size()) + 1;
      values.clear();
      continue;
    }
    values.push_back(resultant(specialize(f, x0), specialize(g, x0)));
  }
  return interpolate_consecutive(values, start);
}

SurdValue evaluate_at_surd(const IntPoly& f, const Integer& scale, const Integer& d) {
  SurdValue v{0, 0};
  Integer even_power = 1;  // (scale^2 d)^k
  const Integer step = scale * scale * d;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); i += 2) {
    v.rational += c[i] * even_power;
    if (i + 1 < c.size()) v.surd += c[i + 1] * even_power * scale;
    even_power *= step;
  }
  return v;
}

int sign(const SurdValue& v, const Integer& d) {
  const int sa = sgn(v.rational);
  const int sb = sgn(v.surd);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Integer lhs = v.rational * v.rational;
  const Integer rhs = v.surd * v.surd * d;
  const int c = cmp(lhs, rhs);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

}  // namespace orderone
