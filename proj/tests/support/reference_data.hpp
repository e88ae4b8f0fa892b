#pragma once

// Published reference values used as oracles by the tests.

#include <string>
#include <utility>
#include <vector>

#include "orderone/relations.hpp"

namespace orderone::testing {

inline RootOfUnity z(std::int64_t k, std::int64_t n) { return RootOfUnity(k, n); }

// The ten indecomposable relations of weight <= 8, as printed, with labels.
inline std::vector<std::pair<std::string, std::vector<RootOfUnity>>> small_relations_table() {
  const RootOfUnity one = RootOfUnity::one();
  auto z3 = [](int k) { return z(k, 3); };
  auto z5 = [](int k) { return z(k, 5); };
  auto z7 = [](int k) { return z(k, 7); };
  auto m = [](RootOfUnity a, RootOfUnity b) { return -(a * b); };
  return {
      {"R2", {one, RootOfUnity::minus_one()}},
      {"R3", {one, z3(1), z3(2)}},
      {"R5", {one, z5(1), z5(2), z5(3), z5(4)}},
      {"R5:R3", {z5(1), z5(2), z5(3), z5(4), -z3(1), -z3(2)}},
      {"R7", {one, z7(1), z7(2), z7(3), z7(4), z7(5), z7(6)}},
      {"R5:2R3", {one, z5(2), z5(3), m(z3(1), z5(1)), m(z3(2), z5(1)), m(z3(1), z5(4)), m(z3(2), z5(4))}},
      {"R5:2R3", {one, z5(1), z5(4), m(z3(1), z5(2)), m(z3(2), z5(2)), m(z3(1), z5(3)), m(z3(2), z5(3))}},
      {"R5:3R3", {z5(2), z5(3), -z3(1), -z3(2), m(z3(1), z5(1)), m(z3(2), z5(1)), m(z3(1), z5(4)), m(z3(2), z5(4))}},
      {"R5:3R3", {z5(1), z5(4), -z3(1), -z3(2), m(z3(1), z5(2)), m(z3(2), z5(2)), m(z3(1), z5(3)), m(z3(2), z5(3))}},
      {"R7:R3", {z7(1), z7(2), z7(3), z7(4), z7(5), z7(6), -z3(1), -z3(2)}},
  };
}

}  // namespace orderone::testing
