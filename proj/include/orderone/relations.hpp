#pragma once

// Cyclotomic relations (multisets of signed roots of unity with zero sum) and
// their mod-2 analogues (sum divisible by 2).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orderone/cyclo.hpp"
#include "orderone/root_of_unity.hpp"

namespace orderone {

struct RelationEntry {
  RootOfUnity root;
  int sign = 1;

  RootOfUnity value() const { return sign == 1 ? root : -root; }

  // Ordered by (den, num, sign).
  friend std::strong_ordering operator<=>(const RelationEntry& a, const RelationEntry& b) {
    if (auto c = a.root <=> b.root; c != 0) return c;
    return a.sign <=> b.sign;
  }
  friend bool operator==(const RelationEntry&, const RelationEntry&) = default;
};

// The preferred (root, sign) spelling of a value: values of order 2 mod 4 are
// written as -(root of odd order), everything else with sign +1.
RelationEntry normalize_entry(const RootOfUnity& value);

struct Relation {
  std::vector<RelationEntry> entries;

  std::size_t weight() const { return entries.size(); }
  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation& a, const Relation& b) {
    return a.entries <=> b.entries;
  }
};

Relation relation_from_values(const std::vector<RootOfUnity>& values);

// lcm of the root orders.
std::int64_t relation_level(const Relation& r);
CycInt relation_sum(const Relation& r);
bool is_relation(const Relation& r);
bool is_mod2_relation(const Relation& r);

Relation rotate(const Relation& r, const RootOfUnity& zeta);
Relation conjugate(const Relation& r);

// Minimal rotation zeta^-1 * r over the values zeta of r, with entries
// normalized and sorted. Always contains the entry (+1, identity).
Relation canonicalize(const Relation& r);

// Minimum over the same rotations of the odd part of the lcm of orders.
std::int64_t mod2_level(const Relation& r);

// "R2", "Rp", "Rp:R3" / "Rp:kR3"; a generic "level N" label otherwise.
std::string type_label(const Relation& r);

struct RelationClass {
  Relation representative;
  std::string type_label;
  friend bool operator==(const RelationClass&, const RelationClass&) = default;
};

// Weight capacity of the subset searches below.
inline constexpr std::size_t kMaxIndecomposableWeight = 24;
inline constexpr std::size_t kMaxLiftWeight = 20;
inline constexpr std::size_t kMaxExactPartitionWeight = 18;

// True iff r is nonempty and no nonempty proper sub-multiset has zero (resp.
// even) sum. Throws InvalidInput if r is not a (mod-2) relation.
bool is_indecomposable(const Relation& r, bool mod2);

// Rotation classes of indecomposable relations of weight <= max_weight <= 8,
// sorted by (weight, representative).
std::vector<RelationClass> enumerate_indecomposable(int max_weight);

// Sign flips turning a mod-2 relation into an exact one; the first entry keeps
// its sign. nullopt if there is none.
std::optional<Relation> lift_mod2(const Relation& r);
// Number of lifts with the first sign fixed.
std::size_t count_lifts(const Relation& r);
bool lift_is_unique(const Relation& r);

// Stability of the multiset under complex conjugation; in the mod-2 case
// values are compared up to sign.
bool is_conjugation_stable(const Relation& r, bool mod2);

// A partition into indecomposable (mod-2) relations whose set of parts is
// closed under conjugation.
std::vector<Relation> conjugation_stable_partition(const Relation& r, bool mod2);

// Checks the postconditions of conjugation_stable_partition; on failure the
// reason is written to *why when given.
bool verify_conjugation_stable_partition(const Relation& r, const std::vector<Relation>& parts,
                                         bool mod2, std::string* why = nullptr);

}  // namespace orderone
