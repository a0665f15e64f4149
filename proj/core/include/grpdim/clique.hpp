#pragma once

#include <cstdint>
#include <vector>

#include "grpdim/simple_graph.hpp"

namespace grpdim {

struct CliqueOptions {
  /// Guard against accidentally launching the exact solver on huge instances.
  int max_vertices = 128;
  /// Branch-and-bound node budget; exceeding it raises CapacityError.
  long long max_nodes = 200'000'000;
};

struct CliqueResult {
  int size = 0;
  std::vector<int> witness;  // sorted vertices of a clique of that size
};

/// Exact maximum clique via branch and bound with greedy-coloring bounds.
/// Vertices are expanded in degeneracy order with smallest-index tie breaks,
/// so the witness is reproducible across runs.
CliqueResult max_clique(const SimpleGraph& g, const CliqueOptions& opts = {});

int clique_number(const SimpleGraph& g, const CliqueOptions& opts = {});

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, in a
/// deterministic order. Throws CapacityError beyond `limit` cliques.
std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g, std::size_t limit = 1'000'000);

}  // namespace grpdim
