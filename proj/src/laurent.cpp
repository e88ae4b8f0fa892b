#include "orderone/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orderone/errors.hpp"

namespace orderone {

LaurentExpr::LaurentExpr(std::vector<LaurentTerm> terms) : terms_(std::move(terms)) { normalize(); }

void LaurentExpr::normalize() {
  std::map<Exponent3, Integer> merged;
  for (auto& t : terms_) merged[t.e] += t.coeff;
  terms_.clear();
  for (auto& [e, c] : merged) {
    if (c != 0) terms_.push_back({c, e});
  }
}

LaurentExpr LaurentExpr::constant(const Integer& c) { return monomial(c, 0, 0, 0); }

LaurentExpr LaurentExpr::monomial(const Integer& c, int e1, int e2, int e3) {
  return LaurentExpr({LaurentTerm{c, {e1, e2, e3}}});
}

LaurentExpr LaurentExpr::variable(int index) {
  if (index < 0 || index > 2) throw InvalidInput("variable index must be 0, 1 or 2");
  Exponent3 e{};
  e[static_cast<std::size_t>(index)] = 1;
  return LaurentExpr({LaurentTerm{1, e}});
}

Integer LaurentExpr::coeff(const Exponent3& e) const {
  for (const auto& t : terms_) {
    if (t.e == e) return t.coeff;
  }
  return 0;
}

LaurentExpr& LaurentExpr::operator+=(const LaurentExpr& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

LaurentExpr& LaurentExpr::operator-=(const LaurentExpr& o) { return *this += -o; }

LaurentExpr operator-(const LaurentExpr& a) {
  LaurentExpr out = a;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b) {
  std::vector<LaurentTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      terms.push_back({s.coeff * t.coeff, {s.e[0] + t.e[0], s.e[1] + t.e[1], s.e[2] + t.e[2]}});
    }
  }
  return LaurentExpr(std::move(terms));
}

LaurentExpr LaurentExpr::inverted() const {
  std::vector<LaurentTerm> terms = terms_;
  for (auto& t : terms) {
    for (auto& x : t.e) x = -x;
  }
  return LaurentExpr(std::move(terms));
}

CycInt LaurentExpr::evaluate(const std::array<RootOfUnity, 3>& at) const {
  std::int64_t level = 1;
  for (const auto& r : at) level = static_cast<std::int64_t>(checked_lcm(level, r.order()));
  CycInt out(level);
  std::array<std::int64_t, 3> k{};
  for (std::size_t i = 0; i < 3; ++i) k[i] = at[i].exponent_at(level);
  for (const auto& t : terms_) {
    std::int64_t exp = 0;
    for (std::size_t i = 0; i < 3; ++i) exp += k[i] * t.e[i];
    out.add_term(((exp % level) + level) % level, t.coeff);
  }
  return out;
}

std::string LaurentExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coeff;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < 3; ++i) {
      if (t.e[i] == 0) continue;
      std::string f = "z" + std::to_string(i + 1);
      if (t.e[i] != 1) f += "^" + std::to_string(t.e[i]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

}  // namespace orderone
