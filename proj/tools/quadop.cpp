#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "quadop/commands.hpp"
#include "quadop/error.hpp"

namespace {

struct Flags {
  std::optional<std::string> operad;
  std::optional<std::string> relations_file;
  unsigned max_arity = 5;
  unsigned order = 5;
  std::string method = "recursive";
  std::string field = "auto";
  std::string route = "both";
  unsigned arity_cap = quadop::idealgen::kDefaultArityCap;
  std::string expression;
  bool json = false;
  bool no_timing = false;
};

void add_common(CLI::App* sub, Flags& f) {
  auto* op = sub->add_option("--operad", f.operad, "Built-in operad name");
  auto* rf = sub->add_option("--relations-file", f.relations_file, "JSON relations file");
  op->excludes(rf);
  sub->add_option("--method", f.method, "direct or recursive")->capture_default_str();
  sub->add_option("--field", f.field, "rational, prime:P or auto")->capture_default_str();
  sub->add_option("--arity-cap", f.arity_cap, "Largest arity allowed (at most 7)")
      ->capture_default_str();
  sub->add_flag("--json", f.json, "Print the JSON report");
  sub->add_flag("--no-timing", f.no_timing, "Omit timing from the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for binary quadratic operads"};
  app.require_subcommand(1);
  Flags f;

  auto* dims = app.add_subcommand("dims", "Dimensions of the multilinear components");
  add_common(dims, f);
  dims->add_option("--max-arity", f.max_arity, "Largest arity")->capture_default_str();

  auto* dual = app.add_subcommand("dual", "Relations of the Koszul dual operad");
  add_common(dual, f);
  dual->add_option("--route", f.route, "pairing, lieadm or both")->capture_default_str();

  auto* koszul = app.add_subcommand("koszul", "Hilbert series inversion test");
  add_common(koszul, f);
  koszul->add_option("--order", f.order, "Series truncation order")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Normal form of an arity-3 expression");
  add_common(reduce, f);
  reduce->add_option("expression", f.expression, "Expression or equation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(quadop::ExitCode::usage);
  }

  try {
    quadop::commands::Request req;
    req.command = app.get_subcommands().front()->get_name();
    req.operad = quadop::commands::resolve_operad(f.operad, f.relations_file);
    req.max_arity = f.max_arity;
    req.order = f.order;
    req.options.method = quadop::idealgen::parse_method(f.method);
    req.options.field = quadop::idealgen::FieldStrategy::parse(f.field);
    req.options.arity_cap = f.arity_cap;
    req.route = quadop::commands::parse_route(f.route);
    req.expression = f.expression;
    req.timing = !f.no_timing;

    const auto out = quadop::commands::run(req);
    if (f.json) {
      std::cout << out.report.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return out.exit_code;
  } catch (const quadop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  }
}
