#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "lattice.hpp"

namespace shlat {

// JSON lattice document:
//   { "n": int, "relation": "covers" | "le", "pairs": [[i,j],...], "labels": [...] }
// Documents are always written with cover pairs.
inline nlohmann::json to_json(const FiniteLattice& lat) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : lat.covers()) pairs.push_back({a, b});
  return {{"n", lat.size()}, {"relation", "covers"}, {"pairs", std::move(pairs)}, {"labels", lat.labels()}};
}

inline Validation validate_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SpecError("lattice document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw SpecError("lattice document: \"n\" must be an integer");
  if (!doc.contains("relation") || !doc["relation"].is_string())
    throw SpecError("lattice document: \"relation\" must be \"covers\" or \"le\"");
  const auto relation = doc["relation"].get<std::string>();
  RelationKind kind;
  if (relation == "covers") {
    kind = RelationKind::covers;
  } else if (relation == "le") {
    kind = RelationKind::le;
  } else {
    throw SpecError("lattice document: unknown relation \"" + relation + "\"");
  }
  if (!doc.contains("pairs") || !doc["pairs"].is_array())
    throw SpecError("lattice document: \"pairs\" must be an array");
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& p : doc["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw SpecError("lattice document: every pair must be [i, j] with integer entries");
    pairs.emplace_back(p[0].get<Element>(), p[1].get<Element>());
  }
  const int n = doc["n"].get<int>();
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw SpecError("lattice document: \"labels\" must be an array of strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw SpecError("lattice document: \"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n)
      throw SpecError("lattice document: " + std::to_string(labels.size()) + " labels for n = " + std::to_string(n));
  }
  return FiniteLattice::validate(n, kind, pairs, std::move(labels));
}

inline FiniteLattice from_json(const nlohmann::json& doc) {
  auto v = validate_document(doc);
  if (!v.ok()) throw LatticeError(std::move(v.violations));
  return std::move(*v.lattice);
}

inline FiniteLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open lattice file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError("malformed JSON in " + path + ": " + e.what());
  }
  return from_json(doc);
}

}  // namespace shlat
