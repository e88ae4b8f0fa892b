#include "orderone/serialize.hpp"

#include "orderone/errors.hpp"

namespace orderone {
namespace {

Json rational_to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (!j.is_string()) throw InvalidInput("expected a rational as a string");
  Rational r;
  if (r.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("malformed rational '" + j.get<std::string>() + "'");
  r.canonicalize();
  return r;
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) throw InvalidInput(std::string("expected a JSON object for ") + what);
}

PatternKind kind_from_string(const std::string& s) {
  if (s == "parametric") return PatternKind::kParametric;
  if (s == "sporadic") return PatternKind::kSporadic;
  throw InvalidInput("unknown pattern kind '" + s + "'");
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("malformed integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw InvalidInput("expected an integer or a decimal string");
}

void to_json(Json& j, const IntPoly& p) {
  j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(integer_to_json(c));
}

void from_json(const Json& j, IntPoly& p) {
  if (!j.is_array()) throw InvalidInput("expected a coefficient array");
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  p = IntPoly(std::move(coeffs));
}

void to_json(Json& j, const RootOfUnity& r) { j = r.to_string(); }

void from_json(const Json& j, RootOfUnity& r) {
  if (!j.is_string()) throw InvalidInput("expected a root of unity as \"k/n\"");
  r = RootOfUnity::parse(j.get<std::string>());
}

void to_json(Json& j, const CycInt& c) {
  Json coeffs = Json::array();
  for (const auto& v : c.coeffs()) coeffs.push_back(integer_to_json(v));
  j = Json{{"level", c.level()}, {"coeffs", coeffs}};
}

void from_json(const Json& j, CycInt& c) {
  require_object(j, "CycInt");
  std::vector<Integer> coeffs;
  for (const auto& v : j.at("coeffs")) coeffs.push_back(integer_from_json(v));
  c = CycInt(j.at("level").get<std::int64_t>(), std::move(coeffs));
}

void to_json(Json& j, const RelationEntry& e) { j = Json{{"root", e.root}, {"sign", e.sign}}; }

void from_json(const Json& j, RelationEntry& e) {
  require_object(j, "relation entry");
  e.root = j.at("root").get<RootOfUnity>();
  e.sign = j.at("sign").get<int>();
  if (e.sign != 1 && e.sign != -1) throw InvalidInput("relation sign must be +1 or -1");
}

void to_json(Json& j, const Relation& r) { j = Json{{"entries", r.entries}}; }

void from_json(const Json& j, Relation& r) {
  require_object(j, "relation");
  r.entries = j.at("entries").get<std::vector<RelationEntry>>();
}

void to_json(Json& j, const RelationClass& c) {
  j = Json{{"representative", c.representative}, {"type", c.type_label}, {"weight", c.representative.weight()}};
}

void from_json(const Json& j, RelationClass& c) {
  require_object(j, "relation class");
  c.representative = j.at("representative").get<Relation>();
  c.type_label = j.at("type").get<std::string>();
}

void to_json(Json& j, const NewtonSegment& s) {
  j = Json{{"slope", rational_to_json(s.slope)}, {"multiplicity", s.multiplicity}};
}

void from_json(const Json& j, NewtonSegment& s) {
  require_object(j, "Newton segment");
  s.slope = rational_from_json(j.at("slope"));
  s.multiplicity = j.at("multiplicity").get<int>();
}

void to_json(Json& j, const NewtonPolygon& np) { j = np.segments; }

void from_json(const Json& j, NewtonPolygon& np) { np.segments = j.get<std::vector<NewtonSegment>>(); }

void to_json(Json& j, const MadanPalRecord& r) {
  j = Json{{"n", r.n},
           {"p_n", r.p_n},
           {"real_weil", r.real_weil},
           {"weil", r.weil},
           {"simple_factors", r.simple_factors},
           {"newton_polygon", r.newton},
           {"ordinary", r.ordinary}};
}

void from_json(const Json& j, MadanPalRecord& r) {
  require_object(j, "Madan-Pal record");
  r.n = j.at("n").get<std::uint64_t>();
  r.p_n = j.at("p_n").get<IntPoly>();
  r.real_weil = j.at("real_weil").get<IntPoly>();
  r.weil = j.at("weil").get<IntPoly>();
  r.simple_factors = j.at("simple_factors").get<std::vector<IntPoly>>();
  r.newton = j.at("newton_polygon").get<NewtonPolygon>();
  r.ordinary = j.at("ordinary").get<bool>();
}

void to_json(Json& j, const SolutionTriple& t) { j = Json{t.eta[0], t.eta[1], t.eta[2]}; }

void from_json(const Json& j, SolutionTriple& t) {
  if (!j.is_array() || j.size() != 3) throw InvalidInput("a solution triple is an array of three roots");
  for (std::size_t i = 0; i < 3; ++i) t.eta[i] = j[i].get<RootOfUnity>();
}

void to_json(Json& j, const SolutionPattern& p) {
  j = Json{{"order1", p.order1}, {"order2", p.order2}, {"orders3", p.orders3}, {"kind", to_string(p.kind)}};
}

void from_json(const Json& j, SolutionPattern& p) {
  require_object(j, "solution pattern");
  p.order1 = j.at("order1").get<std::int64_t>();
  p.order2 = j.at("order2").get<std::int64_t>();
  p.orders3 = j.at("orders3").get<std::set<std::int64_t>>();
  p.kind = kind_from_string(j.at("kind").get<std::string>());
}

void to_json(Json& j, const DecompositionReport& r) {
  j = Json{{"n", r.n},
           {"simple_factor", r.simple_factor},
           {"weil", r.weil},
           {"dimension", r.dimension},
           {"f_formula", r.f_formula},
           {"f_oracle", r.f_oracle},
           {"stabilizing_m", r.stabilizing_m},
           {"geom_simple", r.geom_simple},
           {"ordinary", r.ordinary}};
}

void from_json(const Json& j, DecompositionReport& r) {
  require_object(j, "decomposition report");
  r.n = j.at("n").get<std::uint64_t>();
  r.simple_factor = j.at("simple_factor").get<IntPoly>();
  r.weil = j.at("weil").get<IntPoly>();
  r.dimension = j.at("dimension").get<int>();
  r.f_formula = j.at("f_formula").get<std::uint64_t>();
  r.f_oracle = j.at("f_oracle").get<std::uint64_t>();
  r.stabilizing_m = j.at("stabilizing_m").get<std::uint64_t>();
  r.geom_simple = j.at("geom_simple").get<bool>();
  r.ordinary = j.at("ordinary").get<bool>();
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace orderone
