// Python extension. Values cross the boundary as JSON text in the same
// layout as the CLI output; the Python package decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "orderone/geometry.hpp"
#include "orderone/madan_pal.hpp"
#include "orderone/padic.hpp"
#include "orderone/relations.hpp"
#include "orderone/serialize.hpp"
#include "orderone/unity_solver.hpp"
#include "orderone/verify.hpp"
#include "orderone/weil.hpp"

namespace py = pybind11;

namespace orderone {
namespace {

IntPoly poly_from(const std::string& json_text) { return Json::parse(json_text).get<IntPoly>(); }

std::string dump(const Json& j) { return j.dump(); }

Json check_json(const CheckResult& c) { return Json{{"ok", c.ok}, {"detail", c.detail}}; }

SolveOptions solve_options(std::int64_t a, std::int64_t c, std::int64_t l, std::uint64_t max_phi, unsigned workers) {
  SolveOptions o;
  o.max_order_12 = a;
  o.max_order_3 = c;
  o.max_level = l;
  o.max_phi = max_phi;
  o.workers = workers;
  return o;
}

}  // namespace
}  // namespace orderone

PYBIND11_MODULE(_orderone, m) {
  using namespace orderone;
  m.doc() = "Order-one abelian varieties over F_2 (JSON-level bindings)";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def("enumerate_relations", [](int max_weight) { return dump(Json(enumerate_indecomposable(max_weight))); },
        py::arg("max_weight"));
  m.def("check_relations", [](int max_weight) {
    return dump(check_json(check_small_relations(enumerate_indecomposable(max_weight), max_weight)));
  }, py::arg("max_weight") = 8);
  m.def("lift_mod2", [](const std::string& relation) -> std::string {
    const auto lift = lift_mod2(Json::parse(relation).get<Relation>());
    return lift ? dump(Json(*lift)) : "null";
  }, py::arg("relation"));
  m.def("canonicalize", [](const std::string& relation) {
    return dump(Json(canonicalize(Json::parse(relation).get<Relation>())));
  }, py::arg("relation"));

  m.def("madan_pal_poly", [](std::uint64_t n) { return dump(Json(madan_pal_poly(n))); }, py::arg("n"));
  m.def("build_record", [](std::uint64_t n) { return dump(Json(build_record(n))); }, py::arg("n"));

  m.def("newton_polygon", [](const std::string& poly, std::uint64_t q) {
    return dump(Json(newton_polygon(poly_from(poly), WeilContext::from_q(q))));
  }, py::arg("poly"), py::arg("q"));
  m.def("is_ordinary", [](const std::string& poly, std::uint64_t q) {
    return is_ordinary(poly_from(poly), WeilContext::from_q(q));
  }, py::arg("poly"), py::arg("q"));
  m.def("base_extension", [](const std::string& poly, std::uint64_t n) {
    return dump(Json(base_extension(poly_from(poly), n)));
  }, py::arg("poly"), py::arg("n"));
  m.def("honda_tate_exponent", [](const std::string& poly, std::uint64_t q) -> std::optional<int> {
    return honda_tate_exponent(poly_from(poly), WeilContext::from_q(q));
  }, py::arg("poly"), py::arg("q"));
  m.def("padic_factor_degrees", [](const std::string& poly, std::uint64_t p) -> std::string {
    const auto f = padic_factor_degrees(poly_from(poly), p);
    if (!f) return "null";
    Json j = Json::array();
    for (const auto& pf : *f) j.push_back(Json{{"valuation", pf.valuation.get_str()}, {"degree", pf.degree}});
    return dump(j);
  }, py::arg("poly"), py::arg("p"));

  m.def("solve_g", [](std::int64_t a, std::int64_t c, std::int64_t l, std::uint64_t max_phi, unsigned workers) {
    py::gil_scoped_release release;
    return dump(Json(solve_bounded(solve_options(a, c, l, max_phi, workers))));
  }, py::arg("max_order12"), py::arg("max_order3"), py::arg("max_level"), py::arg("max_phi") = 0,
        py::arg("workers") = 0);
  m.def("verify_table2", [](std::int64_t a, std::int64_t c, std::int64_t l, unsigned workers) {
    py::gil_scoped_release release;
    const Table2Report rep = verify_table2(solve_options(a, c, l, 0, workers));
    return dump(Json{{"patterns", rep.patterns},
                     {"solution_count", rep.solutions.size()},
                     {"checks", {{"sporadic", check_json(rep.sporadic)}, {"parametric", check_json(rep.parametric)}}}});
  }, py::arg("max_order12") = 32, py::arg("max_order3") = 32, py::arg("max_level") = 120, py::arg("workers") = 0);

  m.def("f_from_formula", &f_from_formula, py::arg("n"));
  m.def("decompose", [](std::uint64_t n) {
    py::gil_scoped_release release;
    return dump(Json(decompose(n)));
  }, py::arg("n"));
  m.def("geom_isogenous", [](std::uint64_t n1, std::uint64_t n2) {
    py::gil_scoped_release release;
    return geom_isogenous(n1, n2);
  }, py::arg("n1"), py::arg("n2"));
  m.def("geometric_isogeny_pairs", [](std::uint64_t max_n, unsigned workers) {
    py::gil_scoped_release release;
    return dump(Json(geometric_isogeny_pairs(max_n, workers)));
  }, py::arg("max_n"), py::arg("workers") = 0);
}
