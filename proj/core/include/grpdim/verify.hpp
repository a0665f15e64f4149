#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grpdim/graph_builders.hpp"
#include "grpdim/sdim.hpp"

namespace grpdim {

struct VerifyOptions {
  int max_order = 32;
  std::vector<GraphFamily> families = {GraphFamily::power, GraphFamily::enhanced,
                                       GraphFamily::supergraph, GraphFamily::reduced_power};
  std::vector<SdimMethod> methods = {SdimMethod::closed_form, SdimMethod::diameter2_clique,
                                     SdimMethod::vertex_cover, SdimMethod::subset_oracle};
  /// Exhaustive-search cutoff: the oracle is recorded as skipped for larger
  /// groups rather than attempted.
  int oracle_cap = 16;
  /// Worker threads; 0 means hardware concurrency.
  int jobs = 0;
};

/// One method applied to one (group, family) cell. value is empty when the
/// method was skipped: the formula on the power graph, the oracle above its
/// cap, or any method that ran out of search capacity.
struct VerifyCell {
  SdimMethod method = SdimMethod::closed_form;
  std::optional<int> value;
  std::string branch;  ///< formula cells only
  double millis = 0.0;
};

struct VerifyRow {
  std::string group;
  int n = 0;
  GraphFamily family = GraphFamily::power;
  std::vector<VerifyCell> cells;
  bool match = true;  ///< all present values equal
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  int total() const { return static_cast<int>(rows.size()); }
  int mismatches() const;

  /// Long format, one line per cell, fixed header
  /// group,n,family,method,value,branch,millis,match.
  std::string to_csv() const;
  std::string to_json() const;
};

/// Run every requested method on every requested family of every catalog
/// group up to the order bound, in parallel across (group, family) cells.
/// Row order is deterministic: groups by (order, name), then families in the
/// order requested.
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace grpdim
