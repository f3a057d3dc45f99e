#include "quadop/presets.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace quadop::presets {

namespace {

// right-symmetric: (a,b,c) = (a,c,b) with (a,b,c) = a*(b*c) - (a*b)*c
constexpr const char* kRightSymmetric = "a*(b*c) - (a*b)*c - a*(c*b) + (a*c)*b = 0";
// left-symmetric: (a,b,c) = (b,a,c)
constexpr const char* kLeftSymmetric = "a*(b*c) - (a*b)*c - b*(a*c) + (b*a)*c = 0";
constexpr const char* kLeftCommutative = "a*(b*c) - b*(a*c) = 0";
constexpr const char* kRightCommutative = "(a*b)*c - (a*c)*b = 0";
constexpr const char* kAssociative = "(a*b)*c - a*(b*c) = 0";

std::map<std::string, RelationsDoc> build() {
  std::map<std::string, RelationsDoc> m;
  auto add = [&](std::string name, std::vector<std::string> rels) {
    m.emplace(name, RelationsDoc{name, std::move(rels)});
  };
  add("novikov-right", {kRightSymmetric, kLeftCommutative});
  add("novikov-left", {kLeftSymmetric, kRightCommutative});
  add("assoc", {kAssociative});
  add("prelie-right", {kRightSymmetric});
  add("perm", {kAssociative, kRightCommutative});
  // right Leibniz: right multiplications are derivations
  add("leibniz", {"(a*b)*c - (a*c)*b - a*(b*c) = 0"});
  add("zinbiel", {"(a*b)*c - a*(b*c) - a*(c*b) = 0"});
  add("magma", {});
  return m;
}

}  // namespace

const std::map<std::string, RelationsDoc>& registry() {
  static const auto presets = build();
  return presets;
}

const RelationsDoc& preset(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    std::string known;
    for (const auto& [k, v] : reg) known += (known.empty() ? "" : ", ") + k;
    throw ArgumentError("unknown operad '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

RelationsDoc parse_relations_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("relations file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("relations file must hold a JSON object");
  if (!j.contains("relations") || !j["relations"].is_array()) {
    throw ParseError("relations file needs a \"relations\" array");
  }
  RelationsDoc doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  for (const auto& r : j["relations"]) {
    if (!r.is_string()) throw ParseError("every relation must be a string");
    doc.relations.push_back(r.get<std::string>());
  }
  return doc;
}

RelationsDoc load_relations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open relations file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  auto doc = parse_relations_json(ss.str());
  if (doc.name.empty()) doc.name = path;
  return doc;
}

std::string to_json(const RelationsDoc& doc) {
  nlohmann::ordered_json j;
  j["name"] = doc.name;
  j["relations"] = doc.relations;
  return j.dump();
}

idlang::RelationSpace relation_space(const RelationsDoc& doc) {
  return idlang::RelationSpace::from_identities(doc.relations);
}

std::string matching_preset(const idlang::RelationSpace& r) {
  for (const auto& [name, doc] : registry()) {
    if (relation_space(doc) == r) return name;
  }
  return "";
}

}  // namespace quadop::presets
