#include "grpdim/verify.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "grpdim/catalog.hpp"
#include "grpdim/closed_forms.hpp"
#include "grpdim/errors.hpp"

namespace grpdim {

namespace {

struct GroupBundle {
  FiniteGroup group;
  ElementOrderProfile profile;
  CyclicLattice lattice;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

VerifyCell run_cell(const GroupBundle& bundle, const SimpleGraph& graph, GraphFamily family,
                    SdimMethod method, int oracle_cap) {
  VerifyCell cell;
  cell.method = method;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (method) {
      case SdimMethod::closed_form: {
        if (family == GraphFamily::power) break;  // no formula: skipped
        const FormulaReport report =
            family == GraphFamily::enhanced
                ? sdim_enhanced(bundle.group, bundle.profile, bundle.lattice)
                : (family == GraphFamily::supergraph
                       ? sdim_order_supergraph(bundle.group, bundle.profile)
                       : sdim_reduced(bundle.group, bundle.profile));
        cell.value = report.value;
        cell.branch = report.branch;
        break;
      }
      case SdimMethod::diameter2_clique:
        cell.value = sdim_diameter2(graph).value;
        break;
      case SdimMethod::vertex_cover:
        if (graph.vertex_count() > CliqueOptions{}.max_vertices) break;  // skipped
        cell.value = sdim_vertex_cover(graph).value;
        break;
      case SdimMethod::subset_oracle:
        if (graph.vertex_count() > oracle_cap) break;  // skipped
        cell.value = sdim_subset_oracle(graph, OracleOptions{oracle_cap}).value;
        break;
    }
  } catch (const CapacityError&) {
    cell.value.reset();  // ran out of search budget: record as skipped
  }
  cell.millis = elapsed_ms(start);
  return cell;
}

}  // namespace

int VerifyReport::mismatches() const {
  int count = 0;
  for (const VerifyRow& row : rows) count += row.match ? 0 : 1;
  return count;
}

std::string VerifyReport::to_csv() const {
  std::ostringstream out;
  out << "group,n,family,method,value,branch,millis,match\n";
  out << std::fixed << std::setprecision(3);
  for (const VerifyRow& row : rows)
    for (const VerifyCell& cell : row.cells) {
      out << row.group << ',' << row.n << ',' << family_name(row.family) << ','
          << method_name(cell.method) << ',';
      if (cell.value)
        out << *cell.value;
      else
        out << "skipped";
      out << ',' << cell.branch << ',' << cell.millis << ',' << (row.match ? "true" : "false")
          << '\n';
    }
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const VerifyRow& row : rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const VerifyCell& cell : row.cells) {
      nlohmann::json c;
      c["method"] = method_name(cell.method);
      if (cell.value)
        c["value"] = *cell.value;
      else
        c["value"] = "skipped";
      if (!cell.branch.empty()) c["branch"] = cell.branch;
      c["millis"] = cell.millis;
      cells.push_back(std::move(c));
    }
    rows_json.push_back({{"group", row.group},
                         {"n", row.n},
                         {"family", family_name(row.family)},
                         {"match", row.match},
                         {"methods", std::move(cells)}});
  }
  nlohmann::json doc;
  doc["summary"] = {{"total", total()}, {"mismatches", mismatches()}};
  doc["rows"] = std::move(rows_json);
  return doc.dump(2) + "\n";
}

VerifyReport run_verify(const VerifyOptions& opts) {
  const std::vector<std::string> names = catalog_descriptors(opts.max_order);

  std::vector<GroupBundle> bundles;
  bundles.reserve(names.size());
  for (const std::string& name : names) {
    FiniteGroup g = build_group(name);
    ElementOrderProfile profile = order_profile(g);
    CyclicLattice lattice = cyclic_lattice(g);
    bundles.push_back({std::move(g), std::move(profile), std::move(lattice)});
  }

  VerifyReport report;
  report.rows.resize(bundles.size() * opts.families.size());
  for (std::size_t gi = 0; gi < bundles.size(); ++gi)
    for (std::size_t fi = 0; fi < opts.families.size(); ++fi) {
      VerifyRow& row = report.rows[gi * opts.families.size() + fi];
      row.group = bundles[gi].group.name();
      row.n = bundles[gi].group.order();
      row.family = opts.families[fi];
    }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= report.rows.size()) return;
      VerifyRow& row = report.rows[i];
      const GroupBundle& bundle = bundles[i / opts.families.size()];
      const SimpleGraph graph =
          build_graph(bundle.group, row.family, bundle.profile, bundle.lattice);
      for (SdimMethod method : opts.methods)
        row.cells.push_back(run_cell(bundle, graph, row.family, method, opts.oracle_cap));
      std::optional<int> seen;
      for (const VerifyCell& cell : row.cells) {
        if (!cell.value) continue;
        if (seen && *seen != *cell.value) row.match = false;
        seen = *cell.value;
      }
    }
  };

  int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(report.rows.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return report;
}

}  // namespace grpdim
