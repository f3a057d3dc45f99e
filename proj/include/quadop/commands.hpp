#pragma once

// The four CLI commands as library calls. Each returns a JSON report, a
// plain-text rendering of it, and the process exit code.

#include <optional>
#include <string>

#include <json.hpp>

#include "quadop/idealgen.hpp"
#include "quadop/presets.hpp"

namespace quadop::commands {

enum class Route { pairing, lieadm, both };
Route parse_route(const std::string& s);
std::string to_string(Route r);

struct Request {
  std::string command;  // "dims", "dual", "koszul" or "reduce"
  presets::RelationsDoc operad;
  unsigned max_arity = 5;
  unsigned order = 5;
  idealgen::Options options;
  Route route = Route::both;
  std::string expression;  // reduce only
  bool timing = true;
};

struct Outcome {
  nlohmann::ordered_json report;
  std::string text;
  int exit_code = 0;
};

/// Resolves --operad / --relations-file into a relations document. Exactly
/// one of the two must be given; throws ArgumentError otherwise.
presets::RelationsDoc resolve_operad(const std::optional<std::string>& preset_name,
                                     const std::optional<std::string>& relations_file);

Outcome run_dims(const Request& req);
Outcome run_dual(const Request& req);
Outcome run_koszul(const Request& req);
Outcome run_reduce(const Request& req);

/// Dispatches on req.command. Library errors propagate as quadop::Error.
Outcome run(const Request& req);

}  // namespace quadop::commands
