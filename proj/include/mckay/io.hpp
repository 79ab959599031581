// JSON encodings of the input types and the shipped verification catalogue.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mckay/classes.hpp"
#include "mckay/jets.hpp"
#include "mckay/orbifold.hpp"
#include "mckay/stringy.hpp"

namespace mckay {

using Json = nlohmann::json;

/// Malformed JSON input (wrong keys, types, or values).
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts an integer or a string "a/b".
Rational rational_from_json(const Json& j, const std::string& where);
/// Integers stay integers; fractions become strings.
Json rational_to_json(const Rational& r);

ClassExpr class_from_json(const Json& j);
Json class_to_json(const ClassExpr& c);

SncModel snc_from_json(const Json& j);
Json snc_to_json(const SncModel& m);

AbelianAction action_from_json(const Json& j);
Json action_to_json(const AbelianAction& a);

SectorSpec sector_spec_from_json(const Json& j);

PolySystem poly_system_from_json(const Json& j);

/// Reads a file, or standard input when the path is "-".
Json read_json(const std::string& path);

struct CatalogueEntry {
  std::string name;
  AbelianAction action;
  SncModel resolution;
  std::string expected;
  std::string notes;
};

/// Loads a catalogue index; action and resolution paths are relative to it.
std::vector<CatalogueEntry> load_catalogue(const std::filesystem::path& index);

}  // namespace mckay
