#include "quadop/commands.hpp"

#include <chrono>
#include <sstream>

#include <gmp.h>

#include "quadop/error.hpp"
#include "quadop/genseries.hpp"
#include "quadop/koszul.hpp"
#include "quadop/lieadm.hpp"

namespace quadop::commands {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

Json versions() {
  return Json{{"quadop", QUADOP_VERSION}, {"gmp", gmp_version}};
}

Json dims_json(const idealgen::DimTable& t) {
  Json out = Json::array();
  for (auto d : t.dims()) out.push_back(d);
  return out;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "]";
}

Json generators_json(const idlang::RelationSpace& r) {
  Json out = Json::array();
  for (const auto& s : r.render_rows()) out.push_back(s + " = 0");
  return out;
}

// Wraps the command-specific body with the shared header and trailer fields.
Outcome finish(const Request& req, Json body, std::string text, int exit_code,
               Clock::time_point start) {
  Outcome out;
  out.report["command"] = req.command;
  out.report["operad"] = req.operad.name;
  for (auto& [k, v] : body.items()) out.report[k] = v;
  out.report["field"] = req.options.field.name();
  out.report["versions"] = versions();
  if (req.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    out.report["timing_ms"] = ms;
  }
  out.text = std::move(text);
  out.exit_code = exit_code;
  return out;
}

}  // namespace

Route parse_route(const std::string& s) {
  if (s == "pairing") return Route::pairing;
  if (s == "lieadm") return Route::lieadm;
  if (s == "both") return Route::both;
  throw ArgumentError("unknown route '" + s + "' (expected pairing, lieadm or both)");
}

std::string to_string(Route r) {
  switch (r) {
    case Route::pairing: return "pairing";
    case Route::lieadm: return "lieadm";
    case Route::both: return "both";
  }
  return "";
}

presets::RelationsDoc resolve_operad(const std::optional<std::string>& preset_name,
                                     const std::optional<std::string>& relations_file) {
  if (preset_name.has_value() == relations_file.has_value()) {
    throw ArgumentError("give exactly one of --operad and --relations-file");
  }
  if (preset_name) return presets::preset(*preset_name);
  return presets::load_relations_file(*relations_file);
}

Outcome run_dims(const Request& req) {
  const auto start = Clock::now();
  const auto r = presets::relation_space(req.operad);
  const auto table = idealgen::dims(r, req.max_arity, req.options, req.operad.name);
  Json body;
  body["dims"] = dims_json(table);
  body["method"] = idealgen::to_string(req.options.method);
  Json fields = Json::array();
  for (const auto& e : table.entries) fields.push_back(e.field);
  body["rank_fields"] = fields;
  return finish(req, std::move(body), "dims " + join(table.dims()) + "\n", 0, start);
}

Outcome run_dual(const Request& req) {
  const auto start = Clock::now();
  const auto r = presets::relation_space(req.operad);
  std::optional<idlang::RelationSpace> by_pairing;
  std::optional<idlang::RelationSpace> by_lieadm;
  if (req.route != Route::lieadm) by_pairing = koszul::koszul_dual(r);
  if (req.route != Route::pairing) by_lieadm = lieadm::jacobiator_conditions(r);
  const auto& dual = by_pairing ? *by_pairing : *by_lieadm;

  Json d;
  d["route"] = to_string(req.route);
  d["dimension"] = dual.dim();
  d["generators"] = generators_json(dual);
  std::ostringstream text;
  text << "dual relations (" << dual.dim() << "-dimensional):\n";
  for (const auto& g : d["generators"]) text << "  " << g.get<std::string>() << "\n";

  int exit_code = 0;
  if (req.route == Route::both) {
    const bool agree = *by_pairing == *by_lieadm;
    d["routes_agree"] = agree;
    text << "routes agree: " << (agree ? "PASS" : "FAIL") << "\n";
    if (!agree) exit_code = static_cast<int>(ExitCode::cross_check);
  }
  const auto match = presets::matching_preset(dual);
  d["equals_preset"] = match.empty() ? Json(nullptr) : Json(match);
  if (!match.empty()) text << "equals preset: " << match << "\n";
  Json body;
  body["dual"] = std::move(d);
  return finish(req, std::move(body), text.str(), exit_code, start);
}

Outcome run_koszul(const Request& req) {
  const auto start = Clock::now();
  const auto r = presets::relation_space(req.operad);
  const auto ob = genseries::koszul_obstruction(r, req.order, req.options, req.operad.name);
  Json k;
  k["verdict"] = genseries::to_string(ob.verdict);
  k["obstruction_order"] = ob.order ? Json(*ob.order) : Json(nullptr);
  k["obstruction_coefficient"] = ob.coefficient ? Json(ob.coefficient->get_str()) : Json(nullptr);
  k["dual_dims"] = dims_json(ob.dual_dims);
  k["series"] = genseries::hilbert_series(ob.dims).render();
  k["dual_series"] = genseries::hilbert_series(ob.dual_dims).render();
  k["composite"] = ob.composite.render();
  Json body;
  body["dims"] = dims_json(ob.dims);
  body["koszul"] = std::move(k);

  std::ostringstream text;
  text << "dims " << join(ob.dims.dims()) << "\n"
       << "dual dims " << join(ob.dual_dims.dims()) << "\n"
       << "H(H!(t)) = " << ob.composite.render() << "\n";
  int exit_code = 0;
  if (ob.verdict == genseries::Verdict::not_koszul) {
    text << "NOT-KOSZUL: coefficient " << ob.coefficient->get_str() << " at t^" << *ob.order
         << "\n";
    exit_code = static_cast<int>(ExitCode::not_koszul);
  } else {
    text << "INCONCLUSIVE: no obstruction through order " << req.order << "\n";
  }
  return finish(req, std::move(body), text.str(), exit_code, start);
}

Outcome run_reduce(const Request& req) {
  const auto start = Clock::now();
  const auto r = presets::relation_space(req.operad);
  const auto parsed = idlang::parse(req.expression);
  const auto nf = lieadm::normal_form(parsed.value, r);
  const bool in_span = r.contains(parsed.value);
  Json red;
  red["input"] = req.expression;
  red["normal_form"] = nf.render();
  red["is_equation"] = parsed.is_equation;
  red["in_span"] = in_span;
  std::string text = "normal form: " + nf.render() + "\n";
  if (parsed.is_equation) text += std::string("equation holds: ") + (in_span ? "yes" : "no") + "\n";
  Json body;
  body["reduce"] = std::move(red);
  return finish(req, std::move(body), std::move(text), 0, start);
}

Outcome run(const Request& req) {
  if (req.command == "dims") return run_dims(req);
  if (req.command == "dual") return run_dual(req);
  if (req.command == "koszul") return run_koszul(req);
  if (req.command == "reduce") return run_reduce(req);
  throw ArgumentError("unknown command '" + req.command + "'");
}

}  // namespace quadop::commands
