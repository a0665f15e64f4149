// Command-line front end: group construction, graph export, strong metric
// dimension computation by any method, and catalog-wide cross-validation.
//
// Exit codes: 0 success, 1 value disagreement or verification mismatch,
// 2 usage, input, or capacity errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grpdim/catalog.hpp"
#include "grpdim/closed_forms.hpp"
#include "grpdim/errors.hpp"
#include "grpdim/graph_builders.hpp"
#include "grpdim/graph_io.hpp"
#include "grpdim/order_profile.hpp"
#include "grpdim/sdim.hpp"
#include "grpdim/verify.hpp"

namespace {

using grpdim::GraphFamily;
using grpdim::SdimMethod;

int env_oracle_cap() {
  if (const char* raw = std::getenv("GRPDIM_ORACLE_CAP")) {
    try {
      const int cap = std::stoi(raw);
      if (cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid GRPDIM_ORACLE_CAP='" << raw << "'\n";
  }
  return grpdim::OracleOptions{}.max_vertices;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

nlohmann::json formula_json(const grpdim::FormulaReport& report) {
  nlohmann::json j;
  j["family"] = grpdim::family_name(report.family);
  j["branch"] = report.branch;
  j["value"] = report.value;
  j["n"] = report.n;
  j["omega_n"] = report.omega_n;
  j["lambda"] = report.lambda ? nlohmann::json(*report.lambda) : nlohmann::json(nullptr);
  j["exponent"] = report.exponent;
  j["max_big_omega"] = report.max_big_omega;
  j["omega_reduced"] = report.omega_reduced;
  return j;
}

struct MethodOutcome {
  SdimMethod method;
  std::optional<int> value;
  std::string branch;
  std::vector<int> witness;
  int omega_reduced = 0;
  double millis = 0.0;
};

MethodOutcome run_method(const grpdim::FiniteGroup& group, GraphFamily family,
                         const grpdim::SimpleGraph& graph, SdimMethod method, int oracle_cap) {
  MethodOutcome out;
  out.method = method;
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case SdimMethod::closed_form: {
      const grpdim::FormulaReport report = grpdim::sdim_formula(group, family);
      out.value = report.value;
      out.branch = report.branch;
      out.omega_reduced = report.omega_reduced;
      break;
    }
    case SdimMethod::diameter2_clique: {
      const grpdim::SdimResult r = grpdim::sdim_diameter2(graph);
      out.value = r.value;
      out.witness = r.witness;
      out.omega_reduced = r.omega_reduced;
      break;
    }
    case SdimMethod::vertex_cover: {
      const grpdim::SdimResult r = grpdim::sdim_vertex_cover(graph);
      out.value = r.value;
      out.witness = r.witness;
      break;
    }
    case SdimMethod::subset_oracle: {
      const grpdim::SdimResult r =
          grpdim::sdim_subset_oracle(graph, grpdim::OracleOptions{oracle_cap});
      out.value = r.value;
      out.witness = r.witness;
      break;
    }
  }
  out.millis = elapsed_ms(start);
  return out;
}

nlohmann::json outcome_json(const MethodOutcome& out) {
  nlohmann::json j;
  j["method"] = grpdim::method_name(out.method);
  if (out.value)
    j["value"] = *out.value;
  else
    j["value"] = "skipped";
  if (!out.branch.empty()) j["branch"] = out.branch;
  if (!out.witness.empty()) j["witness"] = out.witness;
  if (out.omega_reduced > 0) j["omega_reduced"] = out.omega_reduced;
  j["millis"] = out.millis;
  return j;
}

int cmd_compute(const std::string& spec, const std::string& family_name,
                const std::string& method_name, bool table, int oracle_cap) {
  const grpdim::FiniteGroup group = grpdim::build_group(spec);
  const GraphFamily family = grpdim::family_from_name(family_name);

  if (method_name == "formula") {
    const grpdim::FormulaReport report = grpdim::sdim_formula(group, family);
    if (table)
      std::cout << group.name() << " " << grpdim::family_name(family) << " formula: sdim = "
                << report.value << " (branch " << report.branch << ")\n";
    else
      std::cout << formula_json(report).dump(2) << "\n";
    return 0;
  }

  const grpdim::SimpleGraph graph = grpdim::build_graph(group, family);

  if (method_name != "all") {
    const MethodOutcome out =
        run_method(group, family, graph, grpdim::method_from_name(method_name), oracle_cap);
    if (table)
      std::cout << group.name() << " " << grpdim::family_name(family) << " "
                << grpdim::method_name(out.method) << ": sdim = " << *out.value << "\n";
    else {
      nlohmann::json j = outcome_json(out);
      j["group"] = group.name();
      j["family"] = grpdim::family_name(family);
      j["n"] = group.order();
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }

  // all: every applicable method, flag disagreement.
  std::vector<MethodOutcome> outcomes;
  if (family != GraphFamily::power)
    outcomes.push_back(run_method(group, family, graph, SdimMethod::closed_form, oracle_cap));
  outcomes.push_back(run_method(group, family, graph, SdimMethod::diameter2_clique, oracle_cap));
  if (graph.vertex_count() <= grpdim::CliqueOptions{}.max_vertices)
    outcomes.push_back(run_method(group, family, graph, SdimMethod::vertex_cover, oracle_cap));
  if (graph.vertex_count() <= oracle_cap)
    outcomes.push_back(run_method(group, family, graph, SdimMethod::subset_oracle, oracle_cap));

  bool match = true;
  for (const MethodOutcome& out : outcomes)
    if (out.value && *out.value != *outcomes.front().value) match = false;

  if (table) {
    std::cout << group.name() << " " << grpdim::family_name(family) << " (n=" << group.order()
              << ")\n";
    for (const MethodOutcome& out : outcomes)
      std::cout << "  " << grpdim::method_name(out.method) << ": " << *out.value << "  ("
                << out.millis << " ms)\n";
    std::cout << (match ? "  all methods agree\n" : "  DISAGREEMENT\n");
  } else {
    nlohmann::json j;
    j["group"] = group.name();
    j["family"] = grpdim::family_name(family);
    j["n"] = group.order();
    j["match"] = match;
    nlohmann::json results = nlohmann::json::array();
    for (const MethodOutcome& out : outcomes) results.push_back(outcome_json(out));
    j["results"] = std::move(results);
    std::cout << j.dump(2) << "\n";
  }
  return match ? 0 : 1;
}

std::vector<GraphFamily> parse_families(const std::string& list) {
  if (list == "all")
    return {GraphFamily::power, GraphFamily::enhanced, GraphFamily::supergraph,
            GraphFamily::reduced_power};
  std::vector<GraphFamily> families;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string item =
        list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    families.push_back(grpdim::family_from_name(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (families.empty()) throw grpdim::InputError("no families given");
  return families;
}

std::vector<SdimMethod> parse_methods(const std::string& list) {
  if (list == "all")
    return {SdimMethod::closed_form, SdimMethod::diameter2_clique, SdimMethod::vertex_cover,
            SdimMethod::subset_oracle};
  std::vector<SdimMethod> methods;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string item =
        list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    methods.push_back(grpdim::method_from_name(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (methods.empty()) throw grpdim::InputError("no methods given");
  return methods;
}

int cmd_verify(int max_order, const std::string& families, const std::string& methods, int jobs,
               const std::string& csv_path, const std::string& json_path, int oracle_cap) {
  if (max_order < 1 || max_order > 720)
    throw grpdim::InputError("verify: --max-order must be between 1 and 720");

  grpdim::VerifyOptions opts;
  opts.max_order = max_order;
  opts.families = parse_families(families);
  opts.methods = parse_methods(methods);
  opts.jobs = jobs;
  opts.oracle_cap = oracle_cap;

  const grpdim::VerifyReport report = grpdim::run_verify(opts);

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw grpdim::InputError("verify: cannot write " + csv_path);
    out << report.to_csv();
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw grpdim::InputError("verify: cannot write " + json_path);
    out << report.to_json();
  }

  std::cout << "verified " << report.total() << " group/family cells up to order " << max_order
            << ": " << report.mismatches() << " mismatches\n";
  for (const grpdim::VerifyRow& row : report.rows)
    if (!row.match) {
      std::cout << "  mismatch: " << row.group << " " << grpdim::family_name(row.family) << ":";
      for (const grpdim::VerifyCell& cell : row.cells)
        if (cell.value)
          std::cout << " " << grpdim::method_name(cell.method) << "=" << *cell.value;
      std::cout << "\n";
    }
  return report.mismatches() == 0 ? 0 : 1;
}

int cmd_export(const std::string& spec, const std::string& family_name, const std::string& format,
               const std::string& out_path) {
  const grpdim::FiniteGroup group = grpdim::build_group(spec);
  const GraphFamily family = grpdim::family_from_name(family_name);
  const grpdim::SimpleGraph graph = grpdim::build_graph(group, family);

  std::string text;
  if (format == "dot") {
    const grpdim::ElementOrderProfile profile = grpdim::order_profile(group);
    text = grpdim::graph_to_dot(graph, group.name() + "_" + grpdim::family_name(family),
                                &profile.orders);
  } else if (format == "json") {
    text = grpdim::graph_to_json(graph);
  } else {
    throw grpdim::InputError("export: format must be dot or json");
  }

  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw grpdim::InputError("export: cannot write " + out_path);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group graph construction and strong metric dimension"};
  app.require_subcommand(1);

  const int default_cap = env_oracle_cap();

  std::string spec, family = "supergraph", method = "all", format = "json", out_path;
  bool table = false;
  int oracle_cap = default_cap;

  CLI::App* compute = app.add_subcommand("compute", "compute sdim of one group/family");
  compute->add_option("spec", spec, "group descriptor, e.g. Z6, Q8, Z2xZ4, file:table.txt")
      ->required();
  compute->add_option("--family", family, "power, enhanced, supergraph, reduced_power");
  compute->add_option("--method", method, "formula, diameter2, vertexcover, oracle, all");
  compute->add_flag("--table", table, "human-readable output instead of JSON");
  compute->add_option("--oracle-cap", oracle_cap, "exhaustive-search vertex cap");

  int max_order = 32, jobs = 0;
  std::string families = "all", methods = "all";
  std::string csv_path = "verify_report.csv", json_path = "verify_report.json";

  CLI::App* verify = app.add_subcommand("verify", "cross-validate methods over the catalog");
  verify->add_option("--max-order", max_order, "largest group order to include (<= 720)");
  verify->add_option("--families", families, "comma list or 'all'");
  verify->add_option("--methods", methods, "comma list or 'all'");
  verify->add_option("--jobs", jobs, "worker threads (default: hardware)");
  verify->add_option("--csv", csv_path, "CSV report path ('' to skip)");
  verify->add_option("--json", json_path, "JSON report path ('' to skip)");
  verify->add_option("--oracle-cap", oracle_cap, "oracle skipped above this order");

  CLI::App* exporter = app.add_subcommand("export", "write a built graph as DOT or JSON");
  exporter->add_option("spec", spec, "group descriptor")->required();
  exporter->add_option("--family", family, "power, enhanced, supergraph, reduced_power");
  exporter->add_option("--format", format, "dot or json");
  exporter->add_option("-o,--output", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(spec, family, method, table, oracle_cap);
    if (verify->parsed())
      return cmd_verify(max_order, families, methods, jobs, csv_path, json_path, oracle_cap);
    if (exporter->parsed()) return cmd_export(spec, family, format, out_path);
  } catch (const grpdim::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const grpdim::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const grpdim::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
