#include "mckay/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>

namespace mckay {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing key '" + key + "'");
  return *it;
}

void reject_unknown_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const std::string& a) { return key == a; })) {
      throw SchemaError(where + ": unknown key '" + key + "'");
    }
  }
}

std::int64_t int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": expected a string");
  return j.get<std::string>();
}

EPoly epoly_from_json(const Json& j, const std::string& where) {
  const std::string text = string_from_json(j, where);
  try {
    return parse_epoly(text);
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

std::vector<ClassExpr> parts_from_json(const Json& j, const std::string& where) {
  const Json& parts = require(j, "parts", where);
  if (!parts.is_array()) throw SchemaError(where + ": 'parts' must be an array");
  std::vector<ClassExpr> out;
  for (const auto& p : parts) out.push_back(class_from_json(p));
  return out;
}

int dim_from_json(const Json& j, const std::string& where) {
  const auto n = int_from_json(require(j, "n", where), where + ".n");
  if (n < 0 || n > 10'000) throw SchemaError(where + ": dimension out of range");
  return static_cast<int>(n);
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw SchemaError(where + ": malformed rational '" + j.get<std::string>() + "'");
    }
  }
  throw SchemaError(where + ": expected an integer or a rational string");
}

Json rational_to_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const BigInt n = boost::multiprecision::numerator(r);
    if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min()) {
      return n.convert_to<std::int64_t>();
    }
  }
  return rational_to_string(r);
}

ClassExpr class_from_json(const Json& j) {
  const std::string where = "class";
  const std::string kind = string_from_json(require(j, "kind", where), "class.kind");
  static const std::map<std::string, std::vector<std::string>> keys{
      {"point", {"kind"}},           {"affine", {"kind", "n"}},          {"torus", {"kind", "n"}},
      {"proj", {"kind", "n"}},       {"product", {"kind", "parts"}},     {"disjoint_union", {"kind", "parts"}},
      {"affine_quotient", {"kind", "n", "group"}}, {"custom", {"kind", "label", "epoly"}}};
  if (const auto it = keys.find(kind); it != keys.end()) reject_unknown_keys(j, it->second, where);
  if (kind == "point") return ClassExpr::point();
  if (kind == "affine") return ClassExpr::affine(dim_from_json(j, where));
  if (kind == "torus") return ClassExpr::torus(dim_from_json(j, where));
  if (kind == "proj") return ClassExpr::proj(dim_from_json(j, where));
  if (kind == "product") return ClassExpr::product(parts_from_json(j, where));
  if (kind == "disjoint_union") return ClassExpr::disjoint_union(parts_from_json(j, where));
  if (kind == "affine_quotient") {
    std::string group;
    if (j.contains("group")) group = j["group"].is_string() ? j["group"].get<std::string>() : j["group"].dump();
    return ClassExpr::affine_quotient(dim_from_json(j, where), group);
  }
  if (kind == "custom") {
    return ClassExpr::custom(string_from_json(require(j, "label", where), "class.label"),
                             epoly_from_json(require(j, "epoly", where), "class.epoly"));
  }
  throw SchemaError("class: unknown kind '" + kind + "'");
}

Json class_to_json(const ClassExpr& c) {
  struct Visitor {
    Json operator()(const ClassExpr::Point&) const { return {{"kind", "point"}}; }
    Json operator()(const ClassExpr::Affine& a) const { return {{"kind", "affine"}, {"n", a.n}}; }
    Json operator()(const ClassExpr::Torus& t) const { return {{"kind", "torus"}, {"n", t.n}}; }
    Json operator()(const ClassExpr::Proj& p) const { return {{"kind", "proj"}, {"n", p.n}}; }
    Json operator()(const ClassExpr::Product& p) const {
      Json parts = Json::array();
      for (const auto& x : p.parts) parts.push_back(class_to_json(x));
      return {{"kind", "product"}, {"parts", parts}};
    }
    Json operator()(const ClassExpr::DisjointUnion& d) const {
      Json parts = Json::array();
      for (const auto& x : d.parts) parts.push_back(class_to_json(x));
      return {{"kind", "disjoint_union"}, {"parts", parts}};
    }
    Json operator()(const ClassExpr::AffineQuotient& q) const {
      return {{"kind", "affine_quotient"}, {"n", q.n}, {"group", q.group}};
    }
    Json operator()(const ClassExpr::Custom& c) const {
      return {{"kind", "custom"}, {"label", c.label}, {"epoly", c.epoly.to_string()}};
    }
  };
  return std::visit(Visitor{}, c.node());
}

SncModel snc_from_json(const Json& j) {
  const std::string where = "snc model";
  reject_unknown_keys(j, {"ambient_dim", "total_class", "divisors", "strata", "name", "notes"}, where);
  const auto dim = int_from_json(require(j, "ambient_dim", where), "ambient_dim");
  const EPoly total = epoly_from_json(require(j, "total_class", where), "total_class");
  const Json& divisors = require(j, "divisors", where);
  if (!divisors.is_array()) throw SchemaError("divisors: expected an array");
  std::vector<Divisor> list;
  for (const auto& d : divisors) {
    list.push_back({string_from_json(require(d, "label", "divisor"), "divisor.label"),
                    rational_from_json(require(d, "mult", "divisor"), "divisor.mult")});
  }
  try {
    SncModel model(static_cast<int>(dim), total, std::move(list));
    const Json& strata = require(j, "strata", where);
    if (!strata.is_array()) throw SchemaError("strata: expected an array");
    for (const auto& s : strata) {
      const Json& labels = require(s, "J", "stratum");
      if (!labels.is_array()) throw SchemaError("stratum.J: expected an array of labels");
      std::vector<std::string> names;
      for (const auto& l : labels) names.push_back(string_from_json(l, "stratum.J"));
      model.add_stratum(names, epoly_from_json(require(s, "class", "stratum"), "stratum.class"));
    }
    return model;
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("snc model: ") + e.what());
  }
}

Json snc_to_json(const SncModel& m) {
  Json divisors = Json::array();
  for (const auto& d : m.divisors()) divisors.push_back({{"label", d.label}, {"mult", rational_to_json(d.multiplicity)}});
  Json strata = Json::array();
  for (const auto& [key, cls] : m.strata()) {
    Json labels = Json::array();
    for (auto i : key) labels.push_back(m.divisors()[i].label);
    strata.push_back({{"J", labels}, {"class", cls.to_string()}});
  }
  return {{"ambient_dim", m.ambient_dim()},
          {"total_class", m.total_class().to_string()},
          {"divisors", divisors},
          {"strata", strata}};
}

AbelianAction action_from_json(const Json& j) {
  const std::string where = "action";
  reject_unknown_keys(j, {"dim", "generators", "name", "notes"}, where);
  const auto dim = int_from_json(require(j, "dim", where), "dim");
  const Json& gens = require(j, "generators", where);
  if (!gens.is_array()) throw SchemaError("generators: expected an array");
  std::vector<Generator> list;
  for (const auto& g : gens) {
    Generator gen{int_from_json(require(g, "order", "generator"), "generator.order"), {}};
    const Json& w = require(g, "weights", "generator");
    if (!w.is_array()) throw SchemaError("generator.weights: expected an array");
    for (const auto& x : w) gen.weights.push_back(int_from_json(x, "generator.weights"));
    list.push_back(std::move(gen));
  }
  try {
    return AbelianAction(static_cast<int>(dim), std::move(list));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("action: ") + e.what());
  }
}

Json action_to_json(const AbelianAction& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators()) gens.push_back({{"order", g.order}, {"weights", g.weights}});
  return {{"dim", a.dim()}, {"generators", gens}};
}

SectorSpec sector_spec_from_json(const Json& j) {
  const Json& sectors = require(j, "sectors", "sector spec");
  if (!sectors.is_array()) throw SchemaError("sectors: expected an array");
  SectorSpec spec;
  for (const auto& s : sectors) {
    SectorSpecEntry entry;
    entry.label = s.contains("label") ? string_from_json(s["label"], "sector.label") : "";
    entry.shift = rational_from_json(require(s, "shift", "sector"), "sector.shift");
    const bool has_poly = s.contains("epoly");
    const bool has_table = s.contains("hodge");
    if (has_poly == has_table) throw SchemaError("sector " + entry.label + ": give exactly one of 'epoly' or 'hodge'");
    if (has_poly) {
      entry.coarse = epoly_from_json(s["epoly"], "sector.epoly");
    } else {
      HodgeTable table;
      if (!s["hodge"].is_array()) throw SchemaError("sector.hodge: expected an array of [p, q, h] rows");
      for (const auto& row : s["hodge"]) {
        if (!row.is_array() || row.size() != 3) throw SchemaError("sector.hodge: rows must be [p, q, h]");
        const Rational p = rational_from_json(row[0], "hodge.p");
        const Rational q = rational_from_json(row[1], "hodge.q");
        const auto h = int_from_json(row[2], "hodge.h");
        if (h < 0) throw SchemaError("sector.hodge: negative Hodge number");
        if (h > 0) table[{p, q}] += h;
      }
      entry.coarse = std::move(table);
    }
    if (entry.shift < 0) throw SchemaError("sector " + entry.label + ": negative shift");
    spec.sectors.push_back(std::move(entry));
  }
  return spec;
}

PolySystem poly_system_from_json(const Json& j) {
  const std::string where = "polynomial system";
  reject_unknown_keys(j, {"vars", "polys", "name", "notes"}, where);
  const Json& vars = require(j, "vars", where);
  const Json& polys = require(j, "polys", where);
  if (!vars.is_array() || !polys.is_array()) throw SchemaError(where + ": 'vars' and 'polys' must be arrays");
  std::vector<std::string> names;
  for (const auto& v : vars) names.push_back(string_from_json(v, "vars"));
  std::vector<std::string> exprs;
  for (const auto& p : polys) exprs.push_back(string_from_json(p, "polys"));
  try {
    return PolySystem::parse(std::move(names), exprs);
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<CatalogueEntry> load_catalogue(const std::filesystem::path& index) {
  const Json j = read_json(index.string());
  const Json& entries = require(j, "entries", "catalogue");
  if (!entries.is_array()) throw SchemaError("catalogue.entries: expected an array");
  const auto base = index.parent_path();
  std::vector<CatalogueEntry> out;
  for (const auto& e : entries) {
    const std::string name = string_from_json(require(e, "name", "catalogue entry"), "entry.name");
    const auto action_path = base / string_from_json(require(e, "action", name), name + ".action");
    const auto resolution_path = base / string_from_json(require(e, "resolution", name), name + ".resolution");
    out.push_back({name, action_from_json(read_json(action_path.string())),
                   snc_from_json(read_json(resolution_path.string())),
                   string_from_json(require(e, "expected", name), name + ".expected"),
                   e.contains("notes") ? string_from_json(e["notes"], name + ".notes") : ""});
  }
  return out;
}

}  // namespace mckay
