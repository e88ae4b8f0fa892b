#include "orderone/relations.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "orderone/arith.hpp"
#include "orderone/errors.hpp"

namespace orderone {

RelationEntry normalize_entry(const RootOfUnity& value) {
  if (value.order() % 4 == 2) return {-value, -1};
  return {value, 1};
}

Relation relation_from_values(const std::vector<RootOfUnity>& values) {
  Relation r;
  r.entries.reserve(values.size());
  for (const auto& v : values) r.entries.push_back(normalize_entry(v));
  return r;
}

std::int64_t relation_level(const Relation& r) {
  std::uint64_t l = 1;
  for (const auto& e : r.entries) l = checked_lcm(l, static_cast<std::uint64_t>(e.root.order()));
  return static_cast<std::int64_t>(l);
}

CycInt relation_sum(const Relation& r) {
  const std::int64_t level = relation_level(r);
  CycInt s(level);
  for (const auto& e : r.entries) s.add_term(e.root.exponent_at(level), e.sign);
  return s;
}

bool is_relation(const Relation& r) { return is_zero(relation_sum(r)); }
bool is_mod2_relation(const Relation& r) { return is_even(relation_sum(r)); }

Relation rotate(const Relation& r, const RootOfUnity& zeta) {
  Relation out;
  out.entries.reserve(r.entries.size());
  for (const auto& e : r.entries) out.entries.push_back(normalize_entry(zeta * e.value()));
  return out;
}

Relation conjugate(const Relation& r) {
  Relation out;
  out.entries.reserve(r.entries.size());
  for (const auto& e : r.entries) out.entries.push_back({e.root.inverse(), e.sign});
  return out;
}

namespace {

std::vector<RootOfUnity> distinct_values(const Relation& r) {
  std::vector<RootOfUnity> v;
  for (const auto& e : r.entries) v.push_back(e.value());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Relation canonicalize(const Relation& r) {
  if (r.entries.empty()) return r;
  std::optional<Relation> best;
  for (const auto& s : distinct_values(r)) {
    Relation cand = rotate(r, s.inverse());
    std::sort(cand.entries.begin(), cand.entries.end());
    if (!best || cand < *best) best = std::move(cand);
  }
  return *best;
}

std::int64_t mod2_level(const Relation& r) {
  if (r.entries.empty()) return 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& s : distinct_values(r)) {
    std::uint64_t l = 1;
    for (const auto& e : r.entries) {
      l = checked_lcm(l, static_cast<std::uint64_t>((s.inverse() * e.value()).order()));
    }
    best = std::min(best, static_cast<std::int64_t>(odd_part(l)));
  }
  return best;
}

std::string type_label(const Relation& r) {
  const std::int64_t n = mod2_level(r);
  const std::size_t w = r.weight();
  if (n == 1) return "R2";
  const auto u = static_cast<std::uint64_t>(n);
  if (is_prime(u)) return "R" + std::to_string(n);
  if (n % 3 == 0 && is_prime(u / 3) && u / 3 > 3) {
    const std::size_t p = u / 3;
    const std::size_t k = w > p ? w - p : 0;
    const std::string mult = k == 1 ? "" : std::to_string(k);
    return "R" + std::to_string(p) + ":" + mult + "R3";
  }
  return "level " + std::to_string(n);
}

namespace {

// Coordinates of each entry (as a signed value) on the power basis of the
// common level, as int64; plus their reductions mod 2 as bit vectors.
struct Coordinates {
  int dim = 0;
  std::vector<std::vector<std::int64_t>> exact;
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> parity;
};

Coordinates coordinates_of(const Relation& r) {
  Coordinates c;
  const std::int64_t level = relation_level(r);
  c.dim = static_cast<int>(euler_phi(static_cast<std::uint64_t>(level)));
  c.words = (static_cast<std::size_t>(c.dim) + 63) / 64;
  std::map<RootOfUnity, std::vector<std::int64_t>> memo;
  std::int64_t max_abs = 0;
  for (const auto& e : r.entries) {
    auto it = memo.find(e.root);
    if (it == memo.end()) {
      const IntPoly pb = CycInt::from_root(e.root, 1, level).power_basis();
      std::vector<std::int64_t> row(static_cast<std::size_t>(c.dim), 0);
      for (int j = 0; j <= pb.degree(); ++j) {
        const Integer& x = pb.coeffs()[static_cast<std::size_t>(j)];
        if (!x.fits_slong_p()) throw CapacityError("power basis coordinate exceeds int64");
        row[static_cast<std::size_t>(j)] = x.get_si();
        max_abs = std::max(max_abs, std::abs(row[static_cast<std::size_t>(j)]));
      }
      it = memo.emplace(e.root, std::move(row)).first;
    }
    std::vector<std::int64_t> row = it->second;
    if (e.sign < 0) {
      for (auto& x : row) x = -x;
    }
    std::vector<std::uint64_t> bits(c.words, 0);
    for (int j = 0; j < c.dim; ++j) {
      if (row[static_cast<std::size_t>(j)] & 1) bits[static_cast<std::size_t>(j) / 64] |= 1ULL << (j % 64);
    }
    c.exact.push_back(std::move(row));
    c.parity.push_back(std::move(bits));
  }
  // Subset sums stay far inside int64 at the weights we accept.
  if (max_abs > (std::int64_t{1} << 40)) throw CapacityError("power basis coordinates too large");
  return c;
}

bool all_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}
bool all_zero(const std::vector<std::uint64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

void add_row(std::vector<std::int64_t>& acc, const std::vector<std::int64_t>& row, std::int64_t k) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += k * row[j];
}
void xor_row(std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& row) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] ^= row[j];
}

using Mask = std::uint32_t;

Mask bit(int i) { return Mask{1} << i; }

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Visits every nonempty submask of `mask` in Gray-code order; the callback
// receives the submask and the running exact/parity sums and may return true
// to stop.
template <typename Visit>
void gray_submasks(const Coordinates& c, Mask mask, bool mod2, Visit&& visit) {
  const std::vector<int> idx = bits_of(mask);
  const std::size_t k = idx.size();
  std::vector<std::int64_t> sum(static_cast<std::size_t>(c.dim), 0);
  std::vector<std::uint64_t> par(c.words, 0);
  Mask cur = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    const int b = idx[static_cast<std::size_t>(std::countr_zero(i))];
    const bool adding = !(cur & bit(b));
    cur ^= bit(b);
    if (mod2) {
      xor_row(par, c.parity[static_cast<std::size_t>(b)]);
      if (visit(cur, all_zero(par))) return;
    } else {
      add_row(sum, c.exact[static_cast<std::size_t>(b)], adding ? 1 : -1);
      if (visit(cur, all_zero(sum))) return;
    }
  }
}

bool mask_sum_vanishes(const Coordinates& c, Mask m, bool mod2) {
  if (mod2) {
    std::vector<std::uint64_t> par(c.words, 0);
    for (int b : bits_of(m)) xor_row(par, c.parity[static_cast<std::size_t>(b)]);
    return all_zero(par);
  }
  std::vector<std::int64_t> sum(static_cast<std::size_t>(c.dim), 0);
  for (int b : bits_of(m)) add_row(sum, c.exact[static_cast<std::size_t>(b)], 1);
  return all_zero(sum);
}

// Some nonempty proper submask of m containing its lowest bit vanishes.
bool has_proper_vanishing_part(const Coordinates& c, Mask m, bool mod2) {
  if (std::popcount(m) <= 1) return false;
  const int first = std::countr_zero(m);
  const Mask rest = m & ~bit(first);
  std::vector<std::int64_t> sum = c.exact[static_cast<std::size_t>(first)];
  std::vector<std::uint64_t> par = c.parity[static_cast<std::size_t>(first)];
  const std::vector<int> idx = bits_of(rest);
  Mask cur = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << idx.size()); ++i) {
    const int b = idx[static_cast<std::size_t>(std::countr_zero(i))];
    const bool adding = !(cur & bit(b));
    cur ^= bit(b);
    if (cur == rest) continue;
    if (mod2) {
      xor_row(par, c.parity[static_cast<std::size_t>(b)]);
      if (all_zero(par)) return true;
    } else {
      add_row(sum, c.exact[static_cast<std::size_t>(b)], adding ? 1 : -1);
      if (all_zero(sum)) return true;
    }
  }
  return false;
}

Mask full_mask(std::size_t w) { return w == 32 ? ~Mask{0} : (Mask{1} << w) - 1; }

// Signs (as a mask of negated indices inside `part`, lowest index kept) that
// make the part vanish exactly. Enumerates all of them when `all` is set.
std::vector<Mask> lifts_of(const Coordinates& c, Mask part, bool all) {
  std::vector<Mask> out;
  const int first = std::countr_zero(part);
  const std::vector<int> idx = bits_of(part & ~bit(first));
  std::vector<std::int64_t> sum(static_cast<std::size_t>(c.dim), 0);
  for (int b : bits_of(part)) add_row(sum, c.exact[static_cast<std::size_t>(b)], 1);
  Mask neg = 0;
  if (all_zero(sum)) {
    out.push_back(0);
    if (!all) return out;
  }
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << idx.size()); ++i) {
    const int b = idx[static_cast<std::size_t>(std::countr_zero(i))];
    const bool was_negative = neg & bit(b);
    neg ^= bit(b);
    add_row(sum, c.exact[static_cast<std::size_t>(b)], was_negative ? 2 : -2);
    if (all_zero(sum)) {
      out.push_back(neg);
      if (!all) return out;
    }
  }
  return out;
}

Relation sub_relation(const Relation& r, Mask m) {
  Relation out;
  for (int b : bits_of(m)) out.entries.push_back(r.entries[static_cast<std::size_t>(b)]);
  return out;
}

}  // namespace

bool is_indecomposable(const Relation& r, bool mod2) {
  if (mod2 ? !is_mod2_relation(r) : !is_relation(r)) {
    throw InvalidInput(mod2 ? "not a mod-2 cyclotomic relation" : "not a cyclotomic relation");
  }
  if (r.entries.empty()) return false;
  if (r.weight() > kMaxIndecomposableWeight) {
    throw CapacityError("indecomposability search supports weight <= " +
                        std::to_string(kMaxIndecomposableWeight));
  }
  const Coordinates c = coordinates_of(r);
  return !has_proper_vanishing_part(c, full_mask(r.weight()), mod2);
}

namespace {

// Odd squarefree N composed of primes p with sum (p - 2) <= w - 2, maximal
// under divisibility.
std::vector<std::uint64_t> maximal_odd_levels(int w) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p <= static_cast<std::uint64_t>(w); ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  std::vector<std::uint64_t> ok;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << primes.size()); ++s) {
    std::uint64_t n = 1;
    long budget = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (s & (std::uint64_t{1} << i)) {
        n *= primes[i];
        budget += static_cast<long>(primes[i]) - 2;
      }
    }
    if (budget <= w - 2) ok.push_back(n);
  }
  std::vector<std::uint64_t> maximal;
  for (std::uint64_t n : ok) {
    bool dominated = false;
    for (std::uint64_t m : ok) dominated = dominated || (m != n && m % n == 0);
    if (!dominated) maximal.push_back(n);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

// Multisets of mu_level containing 1, of size <= max_weight, with zero sum
// and no zero-sum proper prefix (in nondecreasing exponent order).
void collect_zero_multisets(std::int64_t level, int max_weight, std::set<Relation>& out) {
  const PowerBasisTable table(level);
  const int dim = table.dimension();
  std::vector<std::vector<std::int64_t>> sums(static_cast<std::size_t>(max_weight) + 1,
                                              std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
  std::vector<std::int64_t> chosen(static_cast<std::size_t>(max_weight), 0);
  for (int j = 0; j < dim; ++j) sums[1][static_cast<std::size_t>(j)] = table.row(0)[j];
  chosen[0] = 0;

  std::function<void(int, std::int64_t)> dfs = [&](int size, std::int64_t last) {
    if (size == max_weight) return;
    const auto& cur = sums[static_cast<std::size_t>(size)];
    auto& next = sums[static_cast<std::size_t>(size) + 1];
    for (std::int64_t k = last; k < level; ++k) {
      const std::int64_t* row = table.row(k);
      bool zero = true;
      for (int j = 0; j < dim; ++j) {
        next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j)] + row[j];
        zero = zero && next[static_cast<std::size_t>(j)] == 0;
      }
      chosen[static_cast<std::size_t>(size)] = k;
      if (zero) {
        std::vector<RootOfUnity> values;
        for (int i = 0; i <= size; ++i) values.emplace_back(chosen[static_cast<std::size_t>(i)], level);
        out.insert(canonicalize(relation_from_values(values)));
      } else {
        dfs(size + 1, k);
      }
    }
  };
  dfs(1, 0);
}

}  // namespace

std::vector<RelationClass> enumerate_indecomposable(int max_weight) {
  if (max_weight < 1) throw InvalidInput("max_weight must be positive");
  if (max_weight > 8) throw CapacityError("enumeration supports max_weight <= 8");
  std::set<Relation> candidates;
  for (std::uint64_t odd : maximal_odd_levels(max_weight)) {
    collect_zero_multisets(static_cast<std::int64_t>(2 * odd), max_weight, candidates);
  }
  std::vector<RelationClass> out;
  for (const auto& rel : candidates) {
    if (is_indecomposable(rel, false)) out.push_back({rel, type_label(rel)});
  }
  std::stable_sort(out.begin(), out.end(), [](const RelationClass& a, const RelationClass& b) {
    if (a.representative.weight() != b.representative.weight()) {
      return a.representative.weight() < b.representative.weight();
    }
    return a.representative < b.representative;
  });
  return out;
}

namespace {

void check_lift_input(const Relation& r) {
  if (!is_mod2_relation(r)) throw InvalidInput("not a mod-2 cyclotomic relation");
  if (r.weight() > kMaxLiftWeight) {
    throw CapacityError("lift search supports weight <= " + std::to_string(kMaxLiftWeight));
  }
}

}  // namespace

std::optional<Relation> lift_mod2(const Relation& r) {
  check_lift_input(r);
  if (r.entries.empty()) return r;
  const Coordinates c = coordinates_of(r);
  const std::vector<Mask> lifts = lifts_of(c, full_mask(r.weight()), false);
  if (lifts.empty()) return std::nullopt;
  Relation out = r;
  for (int b : bits_of(lifts.front())) out.entries[static_cast<std::size_t>(b)].sign *= -1;
  if (!is_relation(out)) throw ConsistencyError("lift failed exact confirmation");
  return out;
}

std::size_t count_lifts(const Relation& r) {
  check_lift_input(r);
  if (r.entries.empty()) return 1;
  const Coordinates c = coordinates_of(r);
  return lifts_of(c, full_mask(r.weight()), true).size();
}

bool lift_is_unique(const Relation& r) { return count_lifts(r) == 1; }

namespace {

RootOfUnity up_to_sign(const RootOfUnity& v) { return std::min(v, -v); }

RootOfUnity key_of(const RelationEntry& e, bool mod2) {
  return mod2 ? up_to_sign(e.value()) : e.value();
}

// An involution on indices matching each entry with a conjugate entry; empty
// if the relation is not conjugation-stable.
std::optional<std::vector<int>> conjugation_involution(const Relation& r, bool mod2) {
  std::map<RootOfUnity, std::vector<int>> groups;
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    groups[key_of(r.entries[i], mod2)].push_back(static_cast<int>(i));
  }
  std::vector<int> pi(r.entries.size(), -1);
  for (const auto& [key, idx] : groups) {
    const RootOfUnity ck = mod2 ? up_to_sign(key.inverse()) : key.inverse();
    if (ck == key) {
      for (int i : idx) pi[static_cast<std::size_t>(i)] = i;
      continue;
    }
    auto it = groups.find(ck);
    if (it == groups.end() || it->second.size() != idx.size()) return std::nullopt;
    for (std::size_t k = 0; k < idx.size(); ++k) pi[static_cast<std::size_t>(idx[k])] = it->second[k];
  }
  return pi;
}

class PartitionSolver {
 public:
  PartitionSolver(const Relation& r, bool mod2, std::vector<int> pi)
      : r_(r), mod2_(mod2), pi_(std::move(pi)), c_(coordinates_of(r)) {}

  Mask pi(Mask m) const {
    Mask out = 0;
    for (int b : bits_of(m)) out |= bit(pi_[static_cast<std::size_t>(b)]);
    return out;
  }

  // Smallest nonempty submask with vanishing (mod2: even) sum.
  Mask minimal_vanishing(Mask s, bool mod2) const {
    Mask best = 0;
    int best_size = 64;
    gray_submasks(c_, s, mod2, [&](Mask m, bool vanishes) {
      if (vanishes && std::popcount(m) < best_size) {
        best = m;
        best_size = std::popcount(m);
      }
      return best_size == 1;
    });
    if (best == 0) throw ConsistencyError("no vanishing sub-multiset found");
    return best;
  }

  void mod2_partition(Mask s, std::vector<Mask>& out) const {
    if (s == 0) return;
    const Mask t = minimal_vanishing(s, true);
    const Mask pt = pi(t);
    if (pt == t) {
      out.push_back(t);
      mod2_partition(s & ~t, out);
    } else if ((pt & t) == 0) {
      out.push_back(t);
      out.push_back(pt);
      mod2_partition(s & ~(t | pt), out);
    } else {
      const Mask d = t ^ pt;
      mod2_partition(d, out);
      mod2_partition(s & ~d, out);
    }
  }

  void any_exact_partition(Mask s, std::vector<Mask>& out) const {
    while (s) {
      const Mask t = minimal_vanishing(s, false);
      out.push_back(t);
      s &= ~t;
    }
  }

  // The argument through mod-2 parts and their lifts.
  void exact_partition(Mask s, std::vector<Mask>& out) const {
    if (s == 0) return;
    std::vector<Mask> parts;
    mod2_partition(s, parts);
    std::vector<Mask> neg(parts.size(), 0);
    std::vector<int> partner(parts.size(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (pi(parts[i]) == parts[j]) partner[i] = static_cast<int>(j);
      }
      if (partner[i] < 0) throw ConsistencyError("mod-2 partition is not conjugation-stable");
    }
    bool any_equi = false;
    bool any_anti = false;
    bool all_constant = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::vector<Mask> lifts = lifts_of(c_, parts[i], false);
      if (lifts.empty()) throw ConsistencyError("mod-2 part has no lift");
      neg[i] = lifts.front();
      all_constant = all_constant && neg[i] == 0;
      if (partner[i] == static_cast<int>(i)) {
        const Mask conj_neg = pi(neg[i]);
        if (conj_neg == neg[i]) {
          any_equi = true;
        } else if (conj_neg == (parts[i] & ~neg[i])) {
          any_anti = true;
        } else {
          throw ConsistencyError("lift of a self-conjugate part is not unique");
        }
      }
    }
    if (all_constant) {
      out.insert(out.end(), parts.begin(), parts.end());
      return;
    }
    if (any_equi && any_anti) throw ConsistencyError("mixed conjugation behaviour of lifts");
    const bool anti = any_anti;
    // Conjugate parts get conjugate (resp. negated conjugate) signs.
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto j = static_cast<std::size_t>(partner[i]);
      if (j <= i) continue;
      neg[j] = anti ? (parts[j] & ~pi(neg[i])) : pi(neg[i]);
    }
    Mask b = 0;
    for (Mask m : neg) b |= m;
    const Mask a = s & ~b;
    if (a == 0 || b == 0 || !mask_sum_vanishes(c_, a, false) || !mask_sum_vanishes(c_, b, false)) {
      throw ConsistencyError("sign level sets are not relations");
    }
    if (anti) {
      std::vector<Mask> left;
      any_exact_partition(a, left);
      for (Mask m : left) {
        out.push_back(m);
        out.push_back(pi(m));
      }
    } else {
      exact_partition(a, out);
      exact_partition(b, out);
    }
  }

  bool indecomposable(Mask t, bool mod2) const { return !has_proper_vanishing_part(c_, t, mod2); }

  // Complete search: the part through the lowest remaining index is tried in
  // every admissible shape.
  bool exhaustive(Mask s, std::vector<Mask>& out) const {
    if (s == 0) return true;
    const int first = std::countr_zero(s);
    const Mask rest = s & ~bit(first);
    std::vector<Mask> candidates;
    std::vector<int> idx = bits_of(rest);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << idx.size()); ++sub) {
      Mask t = bit(first);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (sub & (std::uint64_t{1} << k)) t |= bit(idx[k]);
      }
      if (!mask_sum_vanishes(c_, t, mod2_)) continue;
      const Mask pt = pi(t);
      if (pt != t && (pt & t) != 0) continue;
      if (!indecomposable(t, mod2_)) continue;
      candidates.push_back(t);
    }
    std::sort(candidates.begin(), candidates.end(), [](Mask x, Mask y) {
      if (std::popcount(x) != std::popcount(y)) return std::popcount(x) < std::popcount(y);
      return x < y;
    });
    for (Mask t : candidates) {
      const Mask pt = pi(t);
      const std::size_t mark = out.size();
      out.push_back(t);
      if (pt != t) out.push_back(pt);
      if (exhaustive(s & ~(t | pt), out)) return true;
      out.resize(mark);
    }
    return false;
  }

  std::vector<Relation> solve() const {
    const Mask all = full_mask(r_.weight());
    std::vector<Mask> masks;
    try {
      if (mod2_) {
        mod2_partition(all, masks);
      } else {
        exact_partition(all, masks);
      }
    } catch (const ConsistencyError&) {
      masks.clear();
      if (!exhaustive(all, masks)) throw ConsistencyError("no conjugation-stable partition exists");
    }
    std::vector<Relation> parts;
    for (Mask m : masks) parts.push_back(sub_relation(r_, m));
    return parts;
  }

 private:
  const Relation& r_;
  bool mod2_;
  std::vector<int> pi_;
  Coordinates c_;
};

std::vector<RootOfUnity> part_key(const Relation& r, bool mod2, bool conj) {
  std::vector<RootOfUnity> k;
  for (const auto& e : r.entries) {
    RootOfUnity v = conj ? e.value().inverse() : e.value();
    k.push_back(mod2 ? up_to_sign(v) : v);
  }
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

bool is_conjugation_stable(const Relation& r, bool mod2) {
  return conjugation_involution(r, mod2).has_value();
}

std::vector<Relation> conjugation_stable_partition(const Relation& r, bool mod2) {
  if (mod2 ? !is_mod2_relation(r) : !is_relation(r)) {
    throw InvalidInput(mod2 ? "not a mod-2 cyclotomic relation" : "not a cyclotomic relation");
  }
  const std::size_t cap = mod2 ? kMaxIndecomposableWeight : kMaxExactPartitionWeight;
  if (r.weight() > cap) {
    throw CapacityError("conjugation-stable partition supports weight <= " + std::to_string(cap));
  }
  auto pi = conjugation_involution(r, mod2);
  if (!pi) throw InvalidInput("relation is not stable under complex conjugation");
  if (r.entries.empty()) return {};
  std::vector<Relation> parts = PartitionSolver(r, mod2, std::move(*pi)).solve();
  std::string why;
  if (!verify_conjugation_stable_partition(r, parts, mod2, &why)) {
    throw ConsistencyError("partition postcondition failed: " + why);
  }
  return parts;
}

bool verify_conjugation_stable_partition(const Relation& r, const std::vector<Relation>& parts,
                                         bool mod2, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<RelationEntry> all;
  for (const auto& p : parts) {
    if (p.entries.empty()) return fail("empty part");
    all.insert(all.end(), p.entries.begin(), p.entries.end());
    if (mod2 ? !is_mod2_relation(p) : !is_relation(p)) return fail("part is not a relation");
    if (!is_indecomposable(p, mod2)) return fail("part is decomposable");
  }
  std::vector<RelationEntry> input = r.entries;
  std::sort(all.begin(), all.end());
  std::sort(input.begin(), input.end());
  if (all != input) return fail("parts do not form a partition of the input");
  std::vector<std::vector<RootOfUnity>> keys;
  std::vector<std::vector<RootOfUnity>> conj_keys;
  for (const auto& p : parts) {
    keys.push_back(part_key(p, mod2, false));
    conj_keys.push_back(part_key(p, mod2, true));
  }
  std::sort(keys.begin(), keys.end());
  std::sort(conj_keys.begin(), conj_keys.end());
  if (keys != conj_keys) return fail("set of parts is not closed under conjugation");
  return true;
}

}  // namespace orderone
