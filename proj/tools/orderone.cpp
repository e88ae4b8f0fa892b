// Command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orderone/cache.hpp"
#include "orderone/errors.hpp"
#include "orderone/geometry.hpp"
#include "orderone/madan_pal.hpp"
#include "orderone/relations.hpp"
#include "orderone/serialize.hpp"
#include "orderone/unity_solver.hpp"
#include "orderone/verify.hpp"
#include "orderone/weil.hpp"

namespace orderone::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

enum class Format { kText, kJson, kCsv };

struct RunConfig {
  Format format = Format::kText;
  unsigned workers = 0;
  std::string cache_dir;
  bool no_cache = false;

  ResultCache cache() const {
    if (no_cache) return ResultCache::disabled();
    return ResultCache(cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(cache_dir));
  }
};

// ---------------------------------------------------------------------------
// Output helpers.

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// Coefficients in ascending degree, space separated.
std::string coeff_list(const IntPoly& p) {
  std::string out;
  for (const auto& c : p.coeffs()) out += (out.empty() ? "" : " ") + c.get_str();
  return out;
}

std::string entries_str(const Relation& r) {
  std::string out;
  for (const auto& e : r.entries) {
    out += (out.empty() ? "" : " ") + std::string(e.sign == 1 ? "+" : "-") + e.root.to_string();
  }
  return out;
}

std::string newton_str(const NewtonPolygon& np) {
  std::string out;
  for (const auto& s : np.segments) out += (out.empty() ? "" : " ") + s.slope.get_str() + ":" + std::to_string(s.multiplicity);
  return out;
}

std::string orders3_str(const std::set<std::int64_t>& s) {
  std::string out;
  for (auto v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

Json check_json(const CheckResult& c) { return Json{{"ok", c.ok}, {"detail", c.detail}}; }

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_check(const std::string& name, const CheckResult& c) {
  std::cout << (c.ok ? "PASS " : "FAIL ") << name << ": " << c.detail << '\n';
}

Json envelope(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

void require_positive(long long v, const std::string& name) {
  if (v <= 0) throw InvalidInput(name + " must be positive");
}

// ---------------------------------------------------------------------------
// Subcommands.

struct RelationsArgs {
  int max_weight = 8;
  bool mod2 = false;
};

int run_relations(const RunConfig& cfg, const RelationsArgs& a) {
  require_positive(a.max_weight, "--max-weight");
  const std::function<std::vector<RelationClass>()> compute = [&] { return enumerate_indecomposable(a.max_weight); };
  const auto classes =
      cfg.cache().get_or_compute<std::vector<RelationClass>>("relations-w" + std::to_string(a.max_weight), compute);
  const CheckResult check = check_small_relations(classes, a.max_weight);
  struct Mod2Info {
    bool indecomposable;
    bool lift_unique;
    std::int64_t level;
  };
  std::vector<Mod2Info> mod2;
  if (a.mod2) {
    for (const auto& c : classes) {
      mod2.push_back({is_indecomposable(c.representative, true), lift_is_unique(c.representative),
                      mod2_level(c.representative)});
    }
  }
  switch (cfg.format) {
    case Format::kJson: {
      Json j = envelope("relations");
      j["max_weight"] = a.max_weight;
      j["classes"] = Json::array();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        Json c = classes[i];
        if (a.mod2) {
          c["mod2"] = Json{{"indecomposable", mod2[i].indecomposable},
                           {"lift_unique", mod2[i].lift_unique},
                           {"level", mod2[i].level}};
        }
        j["classes"].push_back(c);
      }
      j["check"] = check_json(check);
      print_json(j);
      break;
    }
    case Format::kCsv: {
      std::vector<std::string> header{"type", "weight", "entries"};
      if (a.mod2) header.insert(header.end(), {"mod2_indecomposable", "lift_unique", "mod2_level"});
      csv_row(std::cout, header);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        std::vector<std::string> row{c.type_label, std::to_string(c.representative.weight()), entries_str(c.representative)};
        if (a.mod2) {
          row.insert(row.end(), {bool_str(mod2[i].indecomposable), bool_str(mod2[i].lift_unique),
                                 std::to_string(mod2[i].level)});
        }
        csv_row(std::cout, row);
      }
      break;
    }
    case Format::kText: {
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        std::cout << c.type_label << "  weight " << c.representative.weight() << "  " << entries_str(c.representative);
        if (a.mod2) {
          std::cout << "  mod2-indecomposable " << bool_str(mod2[i].indecomposable) << "  lift-unique "
                    << bool_str(mod2[i].lift_unique) << "  mod2-level " << mod2[i].level;
        }
        std::cout << '\n';
      }
      print_check("printed relations", check);
      break;
    }
  }
  return check.ok ? kExitOk : kExitMismatch;
}

int run_madan_pal(const RunConfig& cfg, std::uint64_t n) {
  require_positive(static_cast<long long>(n), "--n");
  const std::function<MadanPalRecord()> compute = [&] { return build_record(n); };
  const auto rec = cfg.cache().get_or_compute<MadanPalRecord>("madan-pal-n" + std::to_string(n), compute);
  switch (cfg.format) {
    case Format::kJson: {
      Json j = envelope("madan-pal");
      j["record"] = rec;
      print_json(j);
      break;
    }
    case Format::kCsv:
      csv_row(std::cout, {"n", "dimension", "ordinary", "newton_polygon", "p_n", "real_weil", "weil", "order"});
      csv_row(std::cout, {std::to_string(rec.n), std::to_string(rec.weil.degree() / 2), bool_str(rec.ordinary),
                          newton_str(rec.newton), coeff_list(rec.p_n), coeff_list(rec.real_weil), coeff_list(rec.weil),
                          rec.weil(Integer(1)).get_str()});
      break;
    case Format::kText:
      std::cout << "n = " << rec.n << "\n"
                << "P_n = " << rec.p_n.to_string() << "\n"
                << "real Weil polynomial = " << rec.real_weil.to_string() << "\n"
                << "Weil polynomial = " << rec.weil.to_string() << "\n"
                << "dimension = " << rec.weil.degree() / 2 << "\n"
                << "order = " << rec.weil(Integer(1)).get_str() << "\n"
                << "Newton polygon = " << newton_str(rec.newton) << "\n"
                << "ordinary = " << bool_str(rec.ordinary) << "\n";
      for (const auto& f : rec.simple_factors) std::cout << "simple factor = " << f.to_string() << "\n";
      break;
  }
  return kExitOk;
}

struct WeilArgs {
  std::uint64_t q = 2;
  std::string poly_file;
  bool newton = false;
  bool ordinary = false;
  std::uint64_t extend = 0;
};

IntPoly read_poly(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  const Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw InvalidInput(path + " is not valid JSON");
  IntPoly p = j.get<IntPoly>();
  if (p.is_zero()) throw InvalidInput("the polynomial is zero");
  return p;
}

int run_weil(const RunConfig& cfg, WeilArgs a) {
  const WeilContext ctx = WeilContext::from_q(a.q);
  const IntPoly f = read_poly(a.poly_file);
  if (!a.newton && !a.ordinary && a.extend == 0) a.newton = a.ordinary = true;
  std::optional<NewtonPolygon> np;
  std::optional<bool> ord;
  std::optional<IntPoly> ext;
  if (a.newton) np = newton_polygon(f, ctx);
  if (a.ordinary) ord = is_ordinary(f, ctx);
  if (a.extend) ext = base_extension(f, a.extend);
  switch (cfg.format) {
    case Format::kJson: {
      Json j = envelope("weil");
      j["q"] = a.q;
      j["poly"] = f;
      if (np) j["newton_polygon"] = *np;
      if (ord) j["ordinary"] = *ord;
      if (ext) j["extension"] = Json{{"n", a.extend}, {"poly", *ext}};
      print_json(j);
      break;
    }
    case Format::kCsv:
      csv_row(std::cout, {"q", "poly", "newton_polygon", "ordinary", "extend_n", "extension"});
      csv_row(std::cout, {std::to_string(a.q), coeff_list(f), np ? newton_str(*np) : "", ord ? bool_str(*ord) : "",
                          ext ? std::to_string(a.extend) : "", ext ? coeff_list(*ext) : ""});
      break;
    case Format::kText:
      std::cout << "poly = " << f.to_string() << " over F_" << a.q << "\n";
      if (np) std::cout << "Newton polygon = " << newton_str(*np) << "\n";
      if (ord) std::cout << "ordinary = " << bool_str(*ord) << "\n";
      if (ext) std::cout << "extension by " << a.extend << " = " << ext->to_string() << "\n";
      break;
  }
  return kExitOk;
}

std::string bounds_key(const SolveOptions& o) {
  return std::to_string(o.max_order_12) + "-" + std::to_string(o.max_order_3) + "-" + std::to_string(o.max_level) +
         "-" + std::to_string(o.max_phi);
}

std::vector<SolutionTriple> cached_solutions(const RunConfig& cfg, const SolveOptions& opt) {
  require_positive(opt.max_order_12, "--max-order12");
  require_positive(opt.max_order_3, "--max-order3");
  require_positive(opt.max_level, "--max-level");
  const std::function<std::vector<SolutionTriple>()> compute = [&] { return solve_bounded(opt); };
  return cfg.cache().get_or_compute<std::vector<SolutionTriple>>("solve-g-" + bounds_key(opt), compute);
}

int run_solve_g(const RunConfig& cfg, const SolveOptions& opt) {
  const auto sols = cached_solutions(cfg, opt);
  auto kind = [](const SolutionTriple& t) { return to_string(is_parametric(t) ? PatternKind::kParametric : PatternKind::kSporadic); };
  switch (cfg.format) {
    case Format::kJson: {
      Json j = envelope("solve-g");
      j["bounds"] = Json{{"max_order12", opt.max_order_12}, {"max_order3", opt.max_order_3},
                         {"max_level", opt.max_level}, {"max_phi", opt.max_phi}};
      j["solutions"] = Json::array();
      for (const auto& t : sols) j["solutions"].push_back(Json{{"eta", t}, {"kind", kind(t)}});
      print_json(j);
      break;
    }
    case Format::kCsv:
      csv_row(std::cout, {"eta1", "eta2", "eta3", "order1", "order2", "order3", "kind"});
      for (const auto& t : sols) {
        const auto o = t.orders();
        csv_row(std::cout, {t.eta[0].to_string(), t.eta[1].to_string(), t.eta[2].to_string(), std::to_string(o[0]),
                            std::to_string(o[1]), std::to_string(o[2]), kind(t)});
      }
      break;
    case Format::kText:
      for (const auto& t : sols) std::cout << t.to_string() << "  " << kind(t) << '\n';
      std::cout << sols.size() << " solutions\n";
      break;
  }
  return kExitOk;
}

int run_verify_table2(const RunConfig& cfg, const SolveOptions& opt) {
  const Table2Report rep = verify_table2(opt, cached_solutions(cfg, opt));
  switch (cfg.format) {
    case Format::kJson: {
      Json j = envelope("verify-table2");
      j["bounds"] = Json{{"max_order12", opt.max_order_12}, {"max_order3", opt.max_order_3},
                         {"max_level", opt.max_level}, {"max_phi", opt.max_phi}};
      j["patterns"] = rep.patterns;
      j["solution_count"] = rep.solutions.size();
      j["checks"] = Json{{"sporadic", check_json(rep.sporadic)}, {"parametric", check_json(rep.parametric)}};
      print_json(j);
      break;
    }
    case Format::kCsv:
      csv_row(std::cout, {"order1", "order2", "orders3", "kind"});
      for (const auto& p : rep.patterns) {
        csv_row(std::cout, {std::to_string(p.order1), std::to_string(p.order2), orders3_str(p.orders3), to_string(p.kind)});
      }
      break;
    case Format::kText:
      std::cout << "order1  order2  orders3  kind\n";
      for (const auto& p : rep.patterns) {
        std::cout << p.order1 << "  " << p.order2 << "  " << orders3_str(p.orders3) << "  " << to_string(p.kind) << '\n';
      }
      print_check("sporadic signatures", rep.sporadic);
      print_check("parametric family", rep.parametric);
      break;
  }
  return rep.sporadic.ok && rep.parametric.ok ? kExitOk : kExitMismatch;
}

void print_reports(const RunConfig& cfg, const std::string& command, const std::vector<DecompositionReport>& reports,
                   const std::vector<std::pair<std::string, CheckResult>>& checks) {
  switch (cfg.format) {
    case Format::kJson: {
      Json j = envelope(command);
      j["reports"] = reports;
      j["checks"] = Json::object();
      for (const auto& [name, c] : checks) j["checks"][name] = check_json(c);
      print_json(j);
      break;
    }
    case Format::kCsv:
      csv_row(std::cout, {"n", "dimension", "f_formula", "f_oracle", "stabilizing_m", "geom_simple", "ordinary",
                          "simple_factor"});
      for (const auto& r : reports) {
        csv_row(std::cout, {std::to_string(r.n), std::to_string(r.dimension), std::to_string(r.f_formula),
                            std::to_string(r.f_oracle), std::to_string(r.stabilizing_m), bool_str(r.geom_simple),
                            bool_str(r.ordinary), coeff_list(r.simple_factor)});
      }
      break;
    case Format::kText:
      for (const auto& r : reports) {
        std::cout << "n = " << r.n << "  dim " << r.dimension << "  f_formula " << r.f_formula << "  f_oracle "
                  << r.f_oracle << "  m " << r.stabilizing_m << "  geom_simple " << bool_str(r.geom_simple)
                  << "  ordinary " << bool_str(r.ordinary) << '\n';
      }
      for (const auto& [name, c] : checks) print_check(name, c);
      break;
  }
}

int run_decompose(const RunConfig& cfg, std::uint64_t n) {
  require_positive(static_cast<long long>(n), "--n");
  const std::function<std::vector<DecompositionReport>()> compute = [&] { return decompose(n); };
  const auto reports = cfg.cache().get_or_compute<std::vector<DecompositionReport>>("decompose-n" + std::to_string(n), compute);
  const CheckResult check = check_theorem(reports);
  print_reports(cfg, "decompose", reports, {{"theorem", check}});
  return check.ok ? kExitOk : kExitMismatch;
}

int run_verify_theorem(const RunConfig& cfg, std::uint64_t max_n, std::uint64_t pairs_max_n) {
  require_positive(static_cast<long long>(max_n), "--max-n");
  const std::function<std::vector<DecompositionReport>()> compute = [&] { return decompose_range(max_n, cfg.workers); };
  const auto reports =
      cfg.cache().get_or_compute<std::vector<DecompositionReport>>("decompose-range-" + std::to_string(max_n), compute);
  std::vector<std::pair<std::string, CheckResult>> checks{{"theorem", check_theorem(reports)},
                                                          {"ordinary_xor_geom_simple", check_ordinary_xor(reports)}};
  if (pairs_max_n > 0) {
    const auto pairs = geometric_isogeny_pairs(pairs_max_n, cfg.workers);
    std::set<std::set<std::uint64_t>> expected;
    for (const auto& p : published_isogeny_pairs()) {
      if (*p.rbegin() <= pairs_max_n) expected.insert(p);
    }
    CheckResult c;
    if (pairs != expected) {
      c.fail("pairs differ from the published list up to " + std::to_string(pairs_max_n));
    } else {
      c.detail = std::to_string(pairs.size()) + " pairs match";
    }
    checks.emplace_back("isogeny_pairs", c);
  }
  print_reports(cfg, "verify-theorem", reports, checks);
  for (const auto& [name, c] : checks) {
    if (!c.ok) return kExitMismatch;
  }
  return kExitOk;
}

int main_impl(int argc, char** argv) {
  CLI::App app{"Order-one abelian varieties over F_2: relations, Weil polynomials and geometric decompositions"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  bool json_flag = false;
  bool csv_flag = false;
  app.add_flag("--json", json_flag, "Same as --format json");
  app.add_flag("--csv", csv_flag, "Same as --format csv");
  app.add_option("--workers", cfg.workers, "Worker threads (0: all cores)");
  app.add_option("--cache-dir", cfg.cache_dir, std::string("Cache directory (default $") + kCacheDirEnv + ")");
  app.add_flag("--no-cache", cfg.no_cache, "Neither read nor write the cache");
  app.fallthrough();

  RelationsArgs rel;
  auto* relations = app.add_subcommand("relations", "Indecomposable cyclotomic relations up to rotation");
  relations->add_option("--max-weight", rel.max_weight, "Largest weight (at most 8)")->required();
  relations->add_flag("--mod2", rel.mod2, "Also report each class as a mod-2 relation");

  std::uint64_t mp_n = 0;
  auto* madan = app.add_subcommand("madan-pal", "The Madan-Pal record for one n");
  madan->add_option("--n", mp_n, "Index n")->required();

  WeilArgs weil_args;
  auto* weil = app.add_subcommand("weil", "Newton polygon, ordinarity and base extension of a polynomial");
  weil->add_option("--q", weil_args.q, "Field size (a prime power)");
  weil->add_option("--poly", weil_args.poly_file, "JSON coefficient array, ascending degree ('-' for stdin)")->required();
  weil->add_flag("--newton", weil_args.newton, "Newton polygon");
  weil->add_flag("--ordinary", weil_args.ordinary, "Ordinarity");
  weil->add_option("--extend", weil_args.extend, "Base extension degree");

  SolveOptions solve_opt{1, 1, 1, 0, 0};
  auto* solve = app.add_subcommand("solve-g", "All solutions of g = 0 in roots of unity inside the bounds");
  solve->add_option("--max-order12", solve_opt.max_order_12, "Largest order of eta1 and eta2")->required();
  solve->add_option("--max-order3", solve_opt.max_order_3, "Largest order of eta3")->required();
  solve->add_option("--max-level", solve_opt.max_level, "Largest lcm of the three orders")->required();
  solve->add_option("--max-phi", solve_opt.max_phi, "Skip levels L with phi(L) above this (0: none)");

  SolveOptions table_opt = kTable2Bounds;
  auto* table2 = app.add_subcommand("verify-table2", "Reproduce the table of solution signatures");
  table2->add_option("--max-order12", table_opt.max_order_12, "Largest order of eta1 and eta2")->capture_default_str();
  table2->add_option("--max-order3", table_opt.max_order_3, "Largest order of eta3")->capture_default_str();
  table2->add_option("--max-level", table_opt.max_level, "Largest lcm of the three orders")->capture_default_str();
  table2->add_option("--max-phi", table_opt.max_phi, "Skip levels L with phi(L) above this (0: none)");

  std::uint64_t dec_n = 0;
  auto* dec = app.add_subcommand("decompose", "Geometric multiplicity of each simple factor of A_n");
  dec->add_option("--n", dec_n, "Index n")->required();

  std::uint64_t thm_max = 32;
  std::uint64_t pairs_max = 0;
  auto* thm = app.add_subcommand("verify-theorem", "Compare f with the closed form for every n up to a bound");
  thm->add_option("--max-n", thm_max, "Largest n")->capture_default_str();
  thm->add_option("--pairs-max-n", pairs_max, "Also compare geometric isogeny pairs up to this n (0: skip)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (json_flag && csv_flag) {
    std::cerr << "--json and --csv are exclusive\n";
    return kExitUsage;
  }
  if (json_flag) format = "json";
  if (csv_flag) format = "csv";
  cfg.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kText;
  solve_opt.workers = table_opt.workers = cfg.workers;

  try {
    if (*relations) return run_relations(cfg, rel);
    if (*madan) return run_madan_pal(cfg, mp_n);
    if (*weil) return run_weil(cfg, weil_args);
    if (*solve) return run_solve_g(cfg, solve_opt);
    if (*table2) return run_verify_table2(cfg, table_opt);
    if (*dec) return run_decompose(cfg, dec_n);
    if (*thm) return run_verify_theorem(cfg, thm_max, pairs_max);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace orderone::cli

int main(int argc, char** argv) { return orderone::cli::main_impl(argc, argv); }
