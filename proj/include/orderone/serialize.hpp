#pragma once

// JSON forms of the domain types. Integers beyond 64 bits are written as
// decimal strings; everything else uses plain JSON numbers.

#include <json.hpp>

#include "orderone/cyclo.hpp"
#include "orderone/geometry.hpp"
#include "orderone/int_poly.hpp"
#include "orderone/madan_pal.hpp"
#include "orderone/relations.hpp"
#include "orderone/root_of_unity.hpp"
#include "orderone/unity_solver.hpp"
#include "orderone/weil.hpp"

namespace orderone {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

void to_json(Json& j, const IntPoly& p);
void from_json(const Json& j, IntPoly& p);

void to_json(Json& j, const RootOfUnity& r);
void from_json(const Json& j, RootOfUnity& r);

void to_json(Json& j, const CycInt& c);
void from_json(const Json& j, CycInt& c);

void to_json(Json& j, const RelationEntry& e);
void from_json(const Json& j, RelationEntry& e);
void to_json(Json& j, const Relation& r);
void from_json(const Json& j, Relation& r);
void to_json(Json& j, const RelationClass& c);
void from_json(const Json& j, RelationClass& c);

void to_json(Json& j, const NewtonSegment& s);
void from_json(const Json& j, NewtonSegment& s);
void to_json(Json& j, const NewtonPolygon& np);
void from_json(const Json& j, NewtonPolygon& np);

void to_json(Json& j, const MadanPalRecord& r);
void from_json(const Json& j, MadanPalRecord& r);

void to_json(Json& j, const SolutionTriple& t);
void from_json(const Json& j, SolutionTriple& t);
void to_json(Json& j, const SolutionPattern& p);
void from_json(const Json& j, SolutionPattern& p);

void to_json(Json& j, const DecompositionReport& r);
void from_json(const Json& j, DecompositionReport& r);

// Canonical text: sorted keys, no whitespace.
std::string canonical_dump(const Json& j);

}  // namespace orderone
