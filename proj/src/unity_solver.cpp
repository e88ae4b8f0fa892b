#include "orderone/unity_solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "orderone/errors.hpp"
#include "orderone/modp.hpp"

namespace orderone {

namespace {

LaurentExpr mono(long c, int e1, int e2, int e3) { return LaurentExpr::monomial(c, e1, e2, e3); }

}  // namespace

const std::vector<LaurentExpr>& s_set() {
  static const std::vector<LaurentExpr> s{
      mono(1, 1, 0, 0),   mono(1, -1, 0, 0),  mono(1, 0, 1, 0),   mono(1, 0, -1, 0),
      mono(1, 0, 0, 1),   mono(1, 0, 0, -1),  mono(-1, 1, 0, -1), mono(-1, -1, 0, 1),
      mono(-1, 0, 1, -1), mono(-1, 0, -1, 1), mono(1, 1, 1, -1),  mono(1, -1, -1, 1),
  };
  return s;
}

const LaurentExpr& u_expr() {
  static const LaurentExpr u = mono(-1, 1, 1, -2);
  return u;
}

const LaurentExpr& g_expr() {
  static const LaurentExpr g = [] {
    LaurentExpr out;
    for (const auto& m : s_set()) out += m;
    const LaurentExpr two = LaurentExpr::constant(2);
    out += two * u_expr() + two * u_expr().inverted();
    return out;
  }();
  return g;
}

std::int64_t SolutionTriple::level() const {
  std::uint64_t l = 1;
  for (const auto& r : eta) l = checked_lcm(l, static_cast<std::uint64_t>(r.order()));
  return static_cast<std::int64_t>(l);
}

std::string SolutionTriple::to_string() const {
  return "(" + eta[0].to_string() + ", " + eta[1].to_string() + ", " + eta[2].to_string() + ")";
}

CycInt eval_g(const SolutionTriple& t) { return g_expr().evaluate(t.eta); }

SymmetryElement SymmetryElement::identity() {
  SymmetryElement s;
  for (int i = 0; i < 3; ++i) s.m[i][i] = 1;
  return s;
}

SymmetryElement SymmetryElement::generator(int index) {
  SymmetryElement s;
  switch (index) {
    case 0:
      for (int i = 0; i < 3; ++i) s.m[i][i] = -1;
      break;
    case 1:
      s.m[0][1] = 1;
      s.m[1][0] = 1;
      s.m[2][2] = 1;
      break;
    case 2:
      s.m[0][0] = 1;
      s.m[1][1] = -1;
      s.m[2][0] = 1;
      s.m[2][2] = -1;
      s.sign[2] = -1;
      break;
    default:
      throw InvalidInput("generator index must be 0, 1 or 2");
  }
  s.word = {index};
  return s;
}

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
  // a_i(b(z)) = sign^a_i prod_j (sign^b_j z^{m^b_j})^{m^a_ij}
  SymmetryElement out;
  for (int i = 0; i < 3; ++i) {
    int sign = a.sign[i];
    for (int j = 0; j < 3; ++j) {
      if (b.sign[j] == -1 && (a.m[i][j] % 2 != 0)) sign = -sign;
      for (int k = 0; k < 3; ++k) out.m[i][k] += a.m[i][j] * b.m[j][k];
    }
    out.sign[i] = sign;
  }
  out.word = a.word;
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

LaurentExpr apply_symmetry(const SymmetryElement& s, const LaurentExpr& e) {
  std::vector<LaurentTerm> terms;
  for (const auto& t : e.terms()) {
    LaurentTerm out{t.coeff, {0, 0, 0}};
    for (int i = 0; i < 3; ++i) {
      if (s.sign[i] == -1 && t.e[i] % 2 != 0) out.coeff = -out.coeff;
      for (int k = 0; k < 3; ++k) out.e[k] += t.e[i] * s.m[i][k];
    }
    terms.push_back(out);
  }
  return LaurentExpr(std::move(terms));
}

SolutionTriple apply_symmetry(const SymmetryElement& s, const SolutionTriple& t) {
  SolutionTriple out;
  for (int i = 0; i < 3; ++i) {
    RootOfUnity r = s.sign[i] == -1 ? RootOfUnity::minus_one() : RootOfUnity::one();
    for (int j = 0; j < 3; ++j) r = r * t.eta[j].pow(s.m[i][j]);
    out.eta[i] = r;
  }
  return out;
}

const std::vector<SymmetryElement>& symmetry_group() {
  static const std::vector<SymmetryElement> group = [] {
    std::vector<SymmetryElement> elems{SymmetryElement::identity()};
    for (std::size_t next = 0; next < elems.size(); ++next) {
      for (int g = 0; g < 3; ++g) {
        SymmetryElement c = compose(SymmetryElement::generator(g), elems[next]);
        if (std::find(elems.begin(), elems.end(), c) == elems.end()) {
          elems.push_back(std::move(c));
          if (elems.size() > 10000) throw ConsistencyError("symmetry group is not finite");
        }
      }
    }
    return elems;
  }();
  return group;
}

std::vector<LaurentExpr> candidate_h_set() {
  std::vector<LaurentExpr> out;
  std::vector<LaurentExpr> monomials = s_set();
  monomials.push_back(u_expr());
  monomials.push_back(u_expr().inverted());
  for (const auto& mu : monomials) {
    out.push_back(mu + LaurentExpr::constant(1));
    out.push_back(mu - LaurentExpr::constant(1));
  }
  const LaurentExpr base = u_expr() + u_expr().inverted();
  const auto& s = s_set();
  const std::size_t pairs = s.size() / 2;
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    if (std::popcount(mask) > 3) continue;
    LaurentExpr h = base;
    for (std::size_t k = 0; k < pairs; ++k) {
      if (mask & (1u << k)) h += s[2 * k] + s[2 * k + 1];
    }
    out.push_back(h);
  }
  return out;
}

std::vector<OrbitComponent> orbit_components() {
  const std::vector<LaurentExpr> vertices = candidate_h_set();
  std::map<LaurentExpr, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], i).second) throw ConsistencyError("duplicate candidate");
  }
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int g = 0; g < 3; ++g) {
      auto it = index.find(apply_symmetry(SymmetryElement::generator(g), vertices[i]));
      if (it == index.end()) throw ConsistencyError("candidate set is not G-stable");
      join(i, it->second);
    }
    const LaurentExpr rest = g_expr() - vertices[i];
    if (rest + vertices[i] != g_expr()) throw ConsistencyError("inconsistent g - h");
    auto it = index.find(rest);
    if (it != index.end()) join(i, it->second);
  }
  std::map<std::size_t, OrbitComponent> comps;
  for (std::size_t i = 0; i < vertices.size(); ++i) comps[find(i)].members.push_back(vertices[i]);
  std::vector<OrbitComponent> out;
  for (auto& [root, c] : comps) {
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitComponent& a, const OrbitComponent& b) { return a.representative < b.representative; });
  return out;
}

std::vector<LaurentExpr> orbit_representatives() {
  std::vector<LaurentExpr> reps;
  for (const auto& c : orbit_components()) reps.push_back(c.representative);
  return reps;
}

bool in_bounds(const SolutionTriple& t, const SolveOptions& o) {
  const auto ord = t.orders();
  return ord[0] <= o.max_order_12 && ord[1] <= o.max_order_12 && ord[2] <= o.max_order_3 &&
         t.level() <= o.max_level;
}

namespace {

struct OrderTriple {
  std::int64_t o1, o2, o3, level;
};

struct LevelData {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> powers;  // omega^k, k < level
};

// Candidate term list: (coeff mod p, exponent vector).
struct ModTerm {
  std::uint64_t coeff;
  int e1, e2, e3;
};

std::vector<std::int64_t> units(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 0; a < n; ++a) {
    if (std::gcd(a, n) == 1) out.push_back(a);
  }
  return out;
}

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

// Evaluates every triple of the given order type that is minimal among its
// images under inversion and the swap; returns the exact zeros.
std::vector<SolutionTriple> search_order_triple(const OrderTriple& ot, const LevelData& data) {
  const std::int64_t L = ot.level;
  const std::uint64_t p = data.p;
  std::vector<ModTerm> terms;
  for (const auto& t : g_expr().terms()) {
    terms.push_back({modp::reduce(t.coeff, p), t.e[0], t.e[1], t.e[2]});
  }
  const auto u1 = units(ot.o1);
  const auto u2 = units(ot.o2);
  const auto u3 = units(ot.o3);
  std::vector<SolutionTriple> found;
  for (auto a1 : u1) {
    const std::int64_t k1 = a1 * (L / ot.o1);
    for (auto a2 : u2) {
      const std::int64_t k2 = a2 * (L / ot.o2);
      for (auto a3 : u3) {
        const std::int64_t k3 = a3 * (L / ot.o3);
        const std::array<std::int64_t, 3> self{k1, k2, k3};
        const std::array<std::int64_t, 3> inv{mod(-k1, L), mod(-k2, L), mod(-k3, L)};
        const std::array<std::int64_t, 3> swp{k2, k1, k3};
        const std::array<std::int64_t, 3> both{inv[1], inv[0], inv[2]};
        if (inv < self || swp < self || both < self) continue;
        std::uint64_t acc = 0;
        for (const auto& t : terms) {
          const std::int64_t e = mod(t.e1 * k1 + t.e2 * k2 + t.e3 * k3, L);
          acc = (acc + t.coeff * data.powers[static_cast<std::size_t>(e)]) % p;
        }
        if (acc != 0) continue;
        SolutionTriple s{{RootOfUnity(k1, L), RootOfUnity(k2, L), RootOfUnity(k3, L)}};
        if (is_zero(eval_g(s))) found.push_back(s);
      }
    }
  }
  return found;
}

}  // namespace

std::vector<SolutionTriple> solve_bounded(const SolveOptions& o) {
  if (o.max_order_12 < 1 || o.max_order_3 < 1 || o.max_level < 1) {
    throw InvalidInput("solve bounds must be positive");
  }
  if (o.max_level > kMaxSolveLevel) {
    throw CapacityError("max_level " + std::to_string(o.max_level) + " exceeds " +
                        std::to_string(kMaxSolveLevel));
  }
  std::vector<OrderTriple> grid;
  std::map<std::int64_t, LevelData> levels;
  for (std::int64_t o1 = 1; o1 <= o.max_order_12; ++o1) {
    for (std::int64_t o2 = 1; o2 <= o.max_order_12; ++o2) {
      for (std::int64_t o3 = 1; o3 <= o.max_order_3; ++o3) {
        const std::int64_t L = std::lcm(std::lcm(o1, o2), o3);
        if (L > o.max_level) continue;
        if (o.max_phi != 0 && euler_phi(static_cast<std::uint64_t>(L)) > o.max_phi) continue;
        grid.push_back({o1, o2, o3, L});
        levels.emplace(L, LevelData{});
      }
    }
  }
  for (auto& [L, data] : levels) {
    data.p = modp::prime_one_mod(static_cast<std::uint64_t>(L));
    const std::uint64_t w = modp::root_of_unity(static_cast<std::uint64_t>(L), data.p);
    data.powers.resize(static_cast<std::size_t>(L));
    std::uint64_t x = 1;
    for (auto& v : data.powers) {
      v = x;
      x = modp::mul(x, w, data.p);
    }
  }
  unsigned workers = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, grid.size())));
  std::vector<std::vector<SolutionTriple>> shards(workers);
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < grid.size(); i += workers) {
      auto found = search_order_triple(grid[i], levels.at(grid[i].level));
      shards[w].insert(shards[w].end(), found.begin(), found.end());
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  std::set<SolutionTriple> out;
  const SymmetryElement inv = SymmetryElement::generator(0);
  const SymmetryElement swp = SymmetryElement::generator(1);
  for (const auto& shard : shards) {
    for (const auto& s : shard) {
      out.insert(s);
      out.insert(apply_symmetry(inv, s));
      out.insert(apply_symmetry(swp, s));
      out.insert(apply_symmetry(inv, apply_symmetry(swp, s)));
    }
  }
  return {out.begin(), out.end()};
}

bool is_parametric(const SolutionTriple& t) {
  for (const auto& s : symmetry_group()) {
    const SolutionTriple img = apply_symmetry(s, t);
    if (img.eta[0] == img.eta[1] && img.eta[2] == -img.eta[0]) return true;
  }
  return false;
}

std::string to_string(PatternKind kind) {
  return kind == PatternKind::kParametric ? "parametric" : "sporadic";
}

std::vector<SolutionPattern> classify_solutions(const std::vector<SolutionTriple>& sols) {
  std::map<std::tuple<int, std::int64_t, std::int64_t>, std::set<std::int64_t>> groups;
  for (const auto& s : sols) {
    auto ord = s.orders();
    const int kind = is_parametric(s) ? 0 : 1;
    groups[{kind, std::min(ord[0], ord[1]), std::max(ord[0], ord[1])}].insert(ord[2]);
  }
  std::vector<SolutionPattern> out;
  for (auto& [key, o3] : groups) {
    const auto& [kind, a, b] = key;
    out.push_back({a, b, o3, kind == 0 ? PatternKind::kParametric : PatternKind::kSporadic});
  }
  return out;
}

const std::vector<SolutionPattern>& published_sporadic_patterns() {
  static const std::vector<SolutionPattern> table{
      {1, 2, {8}, PatternKind::kSporadic},
      {1, 4, {24}, PatternKind::kSporadic},
      {2, 2, {4}, PatternKind::kSporadic},
      {2, 4, {6, 12}, PatternKind::kSporadic},
      {3, 30, {10, 15, 30}, PatternKind::kSporadic},
      {4, 4, {3, 12}, PatternKind::kSporadic},
      {6, 7, {21}, PatternKind::kSporadic},
      {7, 7, {7, 14}, PatternKind::kSporadic},
      {30, 30, {5, 6, 10, 15, 30}, PatternKind::kSporadic},
  };
  return table;
}

bool sporadic_conductor_ok(const SolutionTriple& t) {
  const std::int64_t l = t.level();
  return 24 % l == 0 || 30 % l == 0 || 42 % l == 0;
}

std::vector<RootOfUnity> g_relation_values(const SolutionTriple& t) {
  std::vector<RootOfUnity> values;
  auto value_of = [&](const LaurentExpr& m) {
    const LaurentTerm& term = m.terms().front();
    RootOfUnity r = term.coeff < 0 ? RootOfUnity::minus_one() : RootOfUnity::one();
    for (int i = 0; i < 3; ++i) r = r * t.eta[i].pow(term.e[i]);
    return r;
  };
  for (const auto& m : s_set()) values.push_back(value_of(m));
  const RootOfUnity u = value_of(u_expr());
  values.insert(values.end(), {u, u, u.inverse(), u.inverse()});
  return values;
}

Relation g_relation_at(const SolutionTriple& t) { return relation_from_values(g_relation_values(t)); }

bool u_terms_split(const SolutionTriple& t, std::vector<Relation>* parts_out) {
  const Relation r = g_relation_at(t);
  const std::vector<Relation> parts = conjugation_stable_partition(r, false);
  if (parts_out) *parts_out = parts;
  const RootOfUnity u = g_relation_values(t)[12];
  int holding = 0;
  for (const auto& part : parts) {
    for (const auto& e : part.entries) {
      if (e.value() == u) {
        ++holding;
        break;
      }
    }
  }
  return holding >= 2;
}

LaurentExpr ratio_resultant() {
  using L = LaurentExpr;
  const L one = L::constant(1);
  const L z1 = L::variable(0);
  const L z2inv = mono(1, 0, -1, 0);
  const L z3 = L::variable(2);
  // alpha^2 + (z1 - 1) alpha - 2 z1, and the same equation for alpha / z3 with
  // z2^-1 in place of z1, cleared of denominators. Substituting alpha * z3
  // instead yields g with z3 inverted.
  const L a2 = one, a1 = z1 - one, a0 = L::constant(-2) * z1;
  const L b2 = one, b1 = (z2inv - one) * z3, b0 = L::constant(-2) * z2inv * z3 * z3;
  const L c = a2 * b0 - a0 * b2;
  return c * c - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1);
}

std::optional<RatioIdentity> ratio_resultant_factor() {
  const LaurentExpr res = ratio_resultant();
  const LaurentExpr& g = g_expr();
  if (res.is_zero()) return std::nullopt;
  // Lex order on exponents is a monomial order, so leading terms divide.
  const LaurentTerm& r0 = res.terms().front();
  const LaurentTerm& g0 = g.terms().front();
  if (!mpz_divisible_p(r0.coeff.get_mpz_t(), g0.coeff.get_mpz_t())) return std::nullopt;
  RatioIdentity id;
  id.constant = r0.coeff / g0.coeff;
  id.exponent = {r0.e[0] - g0.e[0], r0.e[1] - g0.e[1], r0.e[2] - g0.e[2]};
  const LaurentExpr factor = LaurentExpr::monomial(id.constant, id.exponent[0], id.exponent[1], id.exponent[2]);
  if (!(factor * g == res)) return std::nullopt;
  return id;
}

bool ratio_resultant_identity() { return ratio_resultant_factor().has_value(); }

}  // namespace orderone
