#include "grpdim/graph_builders.hpp"

#include <algorithm>

#include "grpdim/errors.hpp"

namespace grpdim {

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::power: return "power";
    case GraphFamily::enhanced: return "enhanced";
    case GraphFamily::supergraph: return "supergraph";
    case GraphFamily::reduced_power: return "reduced_power";
  }
  throw InputError("unknown graph family");
}

GraphFamily family_from_name(const std::string& name) {
  if (name == "power") return GraphFamily::power;
  if (name == "enhanced") return GraphFamily::enhanced;
  if (name == "supergraph") return GraphFamily::supergraph;
  if (name == "reduced_power" || name == "reduced") return GraphFamily::reduced_power;
  throw InputError("unknown graph family '" + name +
                   "' (expected power, enhanced, supergraph, or reduced_power)");
}

namespace {

bool memberships_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return false;
}

}  // namespace

SimpleGraph build_graph(const FiniteGroup& g, GraphFamily family,
                        const ElementOrderProfile& profile, const CyclicLattice& lattice) {
  const int n = g.order();
  SimpleGraph graph(n);

  switch (family) {
    case GraphFamily::supergraph:
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          const int a = profile.orders[x], b = profile.orders[y];
          if (a % b == 0 || b % a == 0) graph.add_edge(x, y);
        }
      break;

    case GraphFamily::power:
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (lattice.generated_by(y).contains(x) || lattice.generated_by(x).contains(y))
            graph.add_edge(x, y);
      break;

    case GraphFamily::reduced_power:
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          if (lattice.generated_id(x) == lattice.generated_id(y)) continue;
          if (lattice.generated_by(y).contains(x) || lattice.generated_by(x).contains(y))
            graph.add_edge(x, y);
        }
      break;

    case GraphFamily::enhanced:
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (memberships_intersect(lattice.membership(x), lattice.membership(y)))
            graph.add_edge(x, y);
      break;
  }

  return graph;
}

SimpleGraph build_graph(const FiniteGroup& g, GraphFamily family) {
  const ElementOrderProfile profile = order_profile(g);
  const CyclicLattice lattice(g);
  return build_graph(g, family, profile, lattice);
}

}  // namespace grpdim
