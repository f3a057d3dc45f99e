#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadop/idlang.hpp"

namespace quadop::presets {

/// A named list of identities; presets and relations files share this shape.
struct RelationsDoc {
  std::string name;
  std::vector<std::string> relations;
};

/// Built-in operads, keyed by name.
const std::map<std::string, RelationsDoc>& registry();

/// Throws ArgumentError for an unknown name.
const RelationsDoc& preset(const std::string& name);

/// Reads {"name": string, "relations": [string, ...]}. Throws ParseError on
/// malformed JSON or schema violations.
RelationsDoc load_relations_file(const std::string& path);
RelationsDoc parse_relations_json(const std::string& text);
std::string to_json(const RelationsDoc& doc);

idlang::RelationSpace relation_space(const RelationsDoc& doc);

/// Name of a preset whose relation span equals `r`, or "" if none does.
std::string matching_preset(const idlang::RelationSpace& r);

}  // namespace quadop::presets
