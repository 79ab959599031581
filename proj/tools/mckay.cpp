// mckay: command-line front end for the stringy / orbifold computations.
//
// Exit codes: 0 success or true, 1 semantic failure (mismatch, violation,
// false equality), 2 input error, 3 resource cap exceeded.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mckay/classes.hpp"
#include "mckay/ering.hpp"
#include "mckay/io.hpp"
#include "mckay/jets.hpp"
#include "mckay/orbifold.hpp"
#include "mckay/stringy.hpp"

#ifndef MCKAY_CATALOGUE_PATH
#define MCKAY_CATALOGUE_PATH "catalogue/catalogue.json"
#endif

namespace {

using namespace mckay;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string element_to_string(const GroupElement& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out + ")";
}

Json violations_to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    const char* kind = v.kind == Violation::Kind::Cover                  ? "cover"
                       : v.kind == Violation::Kind::NegativeMultiplicity ? "negative_multiplicity"
                                                                         : "dimension";
    out.push_back({{"kind", kind}, {"message", v.message}});
  }
  return out;
}

/// Prints violations and returns kFailed if the model is invalid.
int report_invalid(const SncModel& model, const std::string& path, const Options& opt) {
  const auto violations = validate_snc(model);
  if (violations.empty()) return kOk;
  if (opt.json()) {
    emit({{"file", path}, {"valid", false}, {"violations", violations_to_json(violations)}});
  } else {
    std::cerr << path << ": invalid SNC model\n";
    for (const auto& v : violations) std::cerr << "  " << v.message << "\n";
  }
  return kFailed;
}

// ---------------------------------------------------------------------------
// epoly

int cmd_epoly_eval(const std::string& expr, const Options& opt) {
  const ERat x = parse_erat(expr);
  if (opt.json()) {
    emit({{"value", x.to_string()}});
  } else {
    std::cout << x.to_string() << "\n";
  }
  return kOk;
}

int cmd_epoly_eq(const std::string& a, const std::string& b, const Options& opt) {
  const ERat x = parse_erat(a);
  const ERat y = parse_erat(b);
  const bool equal = erat_eq(x, y);
  if (opt.json()) {
    emit({{"left", x.to_string()}, {"right", y.to_string()}, {"equal", equal}});
  } else {
    std::cout << (equal ? "true" : "false") << "\n";
  }
  return equal ? kOk : kFailed;
}

int cmd_epoly_truncate(const std::string& expr, std::int64_t level, const Options& opt) {
  const FiltrationSeries s = truncate_filtration(parse_erat(expr), level);
  if (opt.json()) {
    Json terms = Json::array();
    for (const auto& [degree, part] : s.by_degree()) {
      terms.push_back({{"degree", rational_to_json(degree)}, {"terms", part.to_string()}});
    }
    emit({{"level", level}, {"series", s.to_string()}, {"by_degree", terms}});
  } else {
    std::cout << s.to_string() << "\n";
  }
  return kOk;
}

int cmd_epoly_specialize(const std::string& expr, const std::string& u0, const std::string& v0, const Options& opt) {
  Rational u;
  Rational v;
  try {
    u = parse_rational(u0);
    v = parse_rational(v0);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("--u and --v must be integers or fractions a/b");
  }
  const Rational value = specialize(parse_erat(expr), u, v);
  if (opt.json()) {
    emit({{"u", rational_to_json(u)}, {"v", rational_to_json(v)}, {"value", rational_to_json(value)}});
  } else {
    std::cout << rational_to_string(value) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// orbifold

bool is_sector_spec(const Json& j) { return j.is_object() && j.contains("sectors"); }

Json sector_to_json(const Sector& s) {
  return {{"element", s.element},
          {"order", s.order},
          {"exponents", s.exponents},
          {"fixed_dim", s.fixed_dim},
          {"shift", rational_to_json(s.shift)},
          {"age", rational_to_json(s.age())},
          {"coarse_class", s.coarse_class.to_string()}};
}

int cmd_orbifold_sectors(const std::string& path, const Options& opt) {
  const AbelianAction action = action_from_json(read_json(path));
  const auto list = sectors(action);
  if (opt.json()) {
    Json rows = Json::array();
    for (const auto& s : list) rows.push_back(sector_to_json(s));
    emit({{"sectors", rows}});
    return kOk;
  }
  std::cout << "element\torder\texponents\tfixed_dim\tshift\tage\tcoarse\n";
  for (const auto& s : list) {
    std::cout << element_to_string(s.element) << "\t" << s.order << "\t" << element_to_string(s.exponents) << "\t"
              << s.fixed_dim << "\t" << rational_to_string(s.shift) << "\t" << rational_to_string(s.age()) << "\t"
              << s.coarse_class.to_string() << "\n";
  }
  return kOk;
}

int cmd_orbifold_e(const std::string& path, const Options& opt) {
  const Json j = read_json(path);
  const ERat e = is_sector_spec(j) ? orbifold_e(sector_spec_from_json(j)) : orbifold_e(sectors(action_from_json(j)));
  if (opt.json()) {
    emit({{"orbifold_e", e.to_string()}});
  } else {
    std::cout << e.to_string() << "\n";
  }
  return kOk;
}

int cmd_orbifold_hodge(const std::string& path, const Options& opt) {
  const Json j = read_json(path);
  SectorSpec spec;
  if (is_sector_spec(j)) {
    spec = sector_spec_from_json(j);
  } else {
    for (const auto& s : sectors(action_from_json(j))) {
      spec.sectors.push_back({element_to_string(s.element), s.shift, s.coarse_class.numerator()});
    }
  }
  const OrbifoldHodge h = orbifold_hodge(spec);
  if (opt.json()) {
    Json table = Json::array();
    for (const auto& [pq, n] : h.table) {
      table.push_back({rational_to_json(pq.first), rational_to_json(pq.second), n.convert_to<std::int64_t>()});
    }
    Json betti = Json::array();
    for (const auto& [i, b] : h.betti) betti.push_back({rational_to_json(i), b.convert_to<std::int64_t>()});
    Json out{{"hodge", table}, {"betti", betti}, {"euler_from_e", rational_to_json(h.euler_from_e)},
             {"e_check", h.e_check}};
    out["euler_from_betti"] = h.euler_from_betti ? Json(h.euler_from_betti->convert_to<std::int64_t>()) : Json();
    emit(out);
  } else {
    std::cout << "h^{p,q}_orb:\n";
    for (const auto& [pq, n] : h.table) {
      std::cout << "  h^{" << rational_to_string(pq.first) << "," << rational_to_string(pq.second) << "} = " << n
                << "\n";
    }
    std::cout << "betti:\n";
    for (const auto& [i, b] : h.betti) std::cout << "  b_" << rational_to_string(i) << " = " << b << "\n";
    std::cout << "euler (from E) = " << rational_to_string(h.euler_from_e) << "\n";
    if (h.euler_from_betti) {
      std::cout << "euler (from betti) = " << *h.euler_from_betti << (h.e_check ? "  [ok]" : "  [MISMATCH]") << "\n";
    }
  }
  return h.euler_from_betti && !h.e_check ? kFailed : kOk;
}

int cmd_orbifold_check(const std::string& path, const Options& opt) {
  const AbelianAction action = action_from_json(read_json(path));
  const bool gorenstein = is_gorenstein(action);
  const bool reflections = has_reflections(action);
  const auto kernel = trivially_acting_elements(action);
  if (opt.json()) {
    Json k = Json::array();
    for (const auto& g : kernel) k.push_back(g);
    emit({{"group_order", action.group_order()},
          {"gorenstein", gorenstein},
          {"reflections", reflections},
          {"trivially_acting", k}});
  } else {
    std::cout << "group order: " << action.group_order() << "\n";
    std::cout << "gorenstein: " << (gorenstein ? "yes" : "no") << "\n";
    std::cout << "reflections: " << (reflections ? "present" : "none") << "\n";
    for (const auto& g : kernel) {
      std::cout << "warning: element " << element_to_string(g) << " acts trivially\n";
    }
  }
  return gorenstein && !reflections ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// stringy

int cmd_stringy_value(const std::string& path, bool gorenstein, const Options& opt) {
  const SncModel model = snc_from_json(read_json(path));
  if (int rc = report_invalid(model, path, opt)) return rc;
  const ERat value = gorenstein ? gorenstein_volume(model) : batyrev_integral(model);
  if (opt.json()) {
    emit({{gorenstein ? "gorenstein_volume" : "integral", value.to_string()}});
  } else {
    std::cout << value.to_string() << "\n";
  }
  return kOk;
}

int cmd_stringy_validate(const std::string& path, const Options& opt) {
  const SncModel model = snc_from_json(read_json(path));
  if (int rc = report_invalid(model, path, opt)) return rc;
  if (opt.json()) {
    emit({{"file", path}, {"valid", true}, {"violations", Json::array()}});
  } else {
    std::cout << "valid\n";
  }
  return kOk;
}

int cmd_stringy_levels(const std::string& path, std::int64_t max_level, const Options& opt) {
  const SncModel model = snc_from_json(read_json(path));
  if (int rc = report_invalid(model, path, opt)) return rc;
  if (max_level < 0) throw std::invalid_argument("--max must be nonnegative");
  Json rows = Json::array();
  for (std::int64_t n = 0; n <= max_level; ++n) {
    const ERat v = ord_level_volume(model, n);
    if (opt.json()) {
      rows.push_back({{"n", n}, {"volume", v.to_string()}});
    } else {
      std::cout << "n=" << n << "\t" << v.to_string() << "\n";
    }
  }
  if (opt.json()) emit({{"levels", rows}});
  return kOk;
}

int cmd_stringy_kequiv(const std::string& a, const std::string& b, const Options& opt) {
  KPair pair{snc_from_json(read_json(a)), snc_from_json(read_json(b))};
  if (int rc = report_invalid(pair.first, a, opt)) return rc;
  if (int rc = report_invalid(pair.second, b, opt)) return rc;
  const auto report = verify_kequivalence(pair);
  if (opt.json()) {
    emit({{"first", report.first_volume.to_string()},
          {"second", report.second_volume.to_string()},
          {"equal", report.equal}});
  } else {
    std::cout << a << ": " << report.first_volume.to_string() << "\n";
    std::cout << b << ": " << report.second_volume.to_string() << "\n";
    std::cout << (report.equal ? "equal" : "MISMATCH") << "\n";
  }
  return report.equal ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// verify

Json theorem_json(const std::string& name, const MainTheoremReport& r) {
  return {{"name", name},
          {"stringy", r.stringy_side.to_string()},
          {"orbifold", r.orbifold_side.to_string()},
          {"equal", r.equal}};
}

int cmd_verify_pair(const std::string& action_path, const std::string& resolution_path, const Options& opt) {
  const AbelianAction action = action_from_json(read_json(action_path));
  const SncModel model = snc_from_json(read_json(resolution_path));
  const auto report = verify_main_theorem(action, model);
  if (opt.json()) {
    emit(theorem_json(resolution_path, report));
  } else {
    std::cout << "stringy:  " << report.stringy_side.to_string() << "\n";
    std::cout << "orbifold: " << report.orbifold_side.to_string() << "\n";
    std::cout << (report.equal ? "equal" : "MISMATCH") << "\n";
  }
  return report.equal ? kOk : kFailed;
}

int cmd_verify_catalogue(const std::string& index, const Options& opt) {
  const auto entries = load_catalogue(index);
  bool all = true;
  Json rows = Json::array();
  for (const auto& e : entries) {
    const auto report = verify_main_theorem(e.action, e.resolution);
    const bool matches_expected = erat_eq(report.orbifold_side, parse_erat(e.expected));
    const bool ok = report.equal && matches_expected;
    all = all && ok;
    Json row = theorem_json(e.name, report);
    row["expected"] = e.expected;
    row["matches_expected"] = matches_expected;
    rows.push_back(row);
    if (!opt.json()) {
      std::cout << (ok ? "PASS  " : "FAIL  ") << e.name << "\tstringy = " << report.stringy_side.to_string()
                << "\torbifold = " << report.orbifold_side.to_string() << "\n";
    }
  }
  if (opt.json()) emit({{"entries", rows}, {"all_passed", all}});
  return all ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// jets

int cmd_jets_count(const std::string& path, int level, std::uint64_t q, const CountOptions& copt, const Options& opt) {
  const PolySystem sys = poly_system_from_json(read_json(path));
  const auto count = count_jets(sys, level, q, copt);
  if (opt.json()) {
    emit({{"level", level}, {"q", q}, {"count", count}});
  } else {
    std::cout << count << "\n";
  }
  return kOk;
}

int cmd_jets_bundle(const std::string& path, int dim, int max_level, std::uint64_t q, const CountOptions& copt,
                    const Options& opt) {
  const PolySystem sys = poly_system_from_json(read_json(path));
  const BundleReport r = check_smooth_bundle(sys, dim, max_level, q, copt);
  if (opt.json()) {
    emit({{"dim", dim},
          {"q", q},
          {"counts", r.counts},
          {"ratio_holds", r.ratio_holds},
          {"all_hold", r.all_hold()},
          {"first_failing_level", r.first_failing_level()}});
  } else {
    for (std::size_t n = 0; n < r.counts.size(); ++n) {
      std::cout << "c_" << n << " = " << r.counts[n];
      if (n > 0) std::cout << (r.ratio_holds[n - 1] ? "  ratio ok" : "  ratio FAILS");
      std::cout << "\n";
    }
    if (r.all_hold()) {
      std::cout << "all ratios equal q^" << dim << "\n";
    } else {
      std::cout << "first failing level: " << r.first_failing_level() << "\n";
    }
  }
  return r.all_hold() ? kOk : kFailed;
}

int cmd_jets_twisted(int dim, std::int64_t order, const std::vector<std::int64_t>& weights, int level,
                     std::uint64_t q, const CountOptions& copt, const Options& opt) {
  TwistedJetFamily family{dim, order, weights, level};
  const auto count = twisted_jet_count(family, q, copt);
  if (opt.json()) {
    emit({{"count", count}, {"parameters", family.parameter_count()}});
  } else {
    std::cout << count << "\n";
  }
  return kOk;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stringy and orbifold E-functions of Gorenstein quotient singularities"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::function<int()> action;
  CountOptions copt;
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--max-points", copt.max_points, "Cap on the enumerated search space");
    cmd->add_option("--threads", copt.threads, "Worker threads (0 = hardware)");
  };

  // epoly
  auto* epoly = app.add_subcommand("epoly", "Exact E-polynomial arithmetic")->require_subcommand(1);
  std::string expr;
  std::string expr2;
  std::int64_t level = 0;
  std::string u0;
  std::string v0;
  auto* eval = epoly->add_subcommand("eval", "Print the canonical form");
  eval->add_option("expr", expr)->required();
  eval->callback([&] { action = [&] { return cmd_epoly_eval(expr, opt); }; });
  auto* eq = epoly->add_subcommand("eq", "Test equality (exit 1 if different)");
  eq->add_option("a", expr)->required();
  eq->add_option("b", expr2)->required();
  eq->callback([&] { action = [&] { return cmd_epoly_eq(expr, expr2, opt); }; });
  auto* trunc = epoly->add_subcommand("truncate", "Expand modulo the filtration level");
  trunc->add_option("expr", expr)->required();
  trunc->add_option("--level", level)->required();
  trunc->callback([&] { action = [&] { return cmd_epoly_truncate(expr, level, opt); }; });
  auto* spec = epoly->add_subcommand("specialize", "Evaluate at (u, v)");
  spec->add_option("expr", expr)->required();
  spec->add_option("--u", u0)->required();
  spec->add_option("--v", v0)->required();
  spec->callback([&] { action = [&] { return cmd_epoly_specialize(expr, u0, v0, opt); }; });

  // orbifold
  auto* orb = app.add_subcommand("orbifold", "Twisted sectors of abelian quotients")->require_subcommand(1);
  std::string path;
  std::string path2;
  auto* sect = orb->add_subcommand("sectors", "List sectors of an action");
  sect->add_option("file", path)->required();
  sect->callback([&] { action = [&] { return cmd_orbifold_sectors(path, opt); }; });
  auto* orb_e = orb->add_subcommand("e", "Orbifold E-function of an action or sector spec");
  orb_e->add_option("file", path)->required();
  orb_e->callback([&] { action = [&] { return cmd_orbifold_e(path, opt); }; });
  auto* hodge = orb->add_subcommand("hodge", "Orbifold Hodge numbers");
  hodge->add_option("file", path)->required();
  hodge->callback([&] { action = [&] { return cmd_orbifold_hodge(path, opt); }; });
  auto* check = orb->add_subcommand("check", "Gorenstein and reflection checks (exit 1 if either fails)");
  check->add_option("file", path)->required();
  check->callback([&] { action = [&] { return cmd_orbifold_check(path, opt); }; });

  // stringy
  auto* str = app.add_subcommand("stringy", "Volumes from resolution data")->require_subcommand(1);
  auto* integral = str->add_subcommand("integral", "SNC integral of L^-ord");
  integral->add_option("file", path)->required();
  integral->callback([&] { action = [&] { return cmd_stringy_value(path, false, opt); }; });
  auto* gor = str->add_subcommand("gorenstein", "Gorenstein volume");
  gor->add_option("file", path)->required();
  gor->callback([&] { action = [&] { return cmd_stringy_value(path, true, opt); }; });
  std::int64_t max_level = 0;
  auto* levels = str->add_subcommand("levels", "Contact-level volumes");
  levels->add_option("file", path)->required();
  levels->add_option("--max", max_level)->required();
  levels->callback([&] { action = [&] { return cmd_stringy_levels(path, max_level, opt); }; });
  auto* validate = str->add_subcommand("validate", "Check the cover identity and multiplicities");
  validate->add_option("file", path)->required();
  validate->callback([&] { action = [&] { return cmd_stringy_validate(path, opt); }; });
  auto* kequiv = str->add_subcommand("kequiv", "Compare Gorenstein volumes of two models (exit 1 if different)");
  kequiv->add_option("first", path)->required();
  kequiv->add_option("second", path2)->required();
  kequiv->callback([&] { action = [&] { return cmd_stringy_kequiv(path, path2, opt); }; });

  // verify
  auto* verify = app.add_subcommand("verify", "Compare stringy and orbifold sides");
  std::string action_path;
  std::string resolution_path;
  std::string catalogue_path = std::getenv("MCKAY_CATALOGUE") ? std::getenv("MCKAY_CATALOGUE") : MCKAY_CATALOGUE_PATH;
  bool catalogue = false;
  auto* opt_action = verify->add_option("--action", action_path, "AbelianAction JSON");
  auto* opt_resolution = verify->add_option("--resolution", resolution_path, "SncModel JSON");
  auto* opt_catalogue = verify->add_flag("--catalogue", catalogue, "Run every shipped catalogue entry");
  verify->add_option("--catalogue-path", catalogue_path, "Catalogue index file");
  opt_action->needs(opt_resolution)->excludes(opt_catalogue);
  opt_resolution->needs(opt_action);
  verify->callback([&] {
    action = [&] {
      if (catalogue) return cmd_verify_catalogue(catalogue_path, opt);
      if (action_path.empty()) throw std::invalid_argument("give --action and --resolution, or --catalogue");
      return cmd_verify_pair(action_path, resolution_path, opt);
    };
  });

  // jets
  auto* jets = app.add_subcommand("jets", "Jet schemes over small prime fields")->require_subcommand(1);
  int jet_level = 0;
  std::uint64_t q = 2;
  int dim = 0;
  auto* count = jets->add_subcommand("count", "Count F_q-points of L_n X");
  count->add_option("file", path)->required();
  count->add_option("--level", jet_level)->required();
  count->add_option("--q", q)->required();
  add_cap(count);
  count->callback([&] { action = [&] { return cmd_jets_count(path, jet_level, q, copt, opt); }; });
  auto* bundle = jets->add_subcommand("bundle-check", "Check c_{k+1} = q^d c_k (exit 1 on failure)");
  bundle->add_option("file", path)->required();
  bundle->add_option("--dim", dim)->required();
  bundle->add_option("--max-level", jet_level)->required();
  bundle->add_option("--q", q)->required();
  add_cap(bundle);
  bundle->callback([&] { action = [&] { return cmd_jets_bundle(path, dim, jet_level, q, copt, opt); }; });
  auto* twisted = jets->add_subcommand("twisted-count", "Count twisted-jet parameter families");
  std::int64_t order = 1;
  std::vector<std::int64_t> weights;
  twisted->add_option("--dim", dim)->required();
  twisted->add_option("--order", order)->required();
  twisted->add_option("--weights", weights)->required()->delimiter(',');
  twisted->add_option("--level", jet_level)->required();
  twisted->add_option("--q", q)->required();
  add_cap(twisted);
  twisted->callback([&] { action = [&] { return cmd_jets_twisted(dim, order, weights, jet_level, q, copt, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (!action) return kInputError;
  return guarded(action);
}
