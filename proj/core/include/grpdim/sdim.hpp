#pragma once

#include <string>
#include <vector>

#include "grpdim/clique.hpp"
#include "grpdim/finite_group.hpp"
#include "grpdim/simple_graph.hpp"

namespace grpdim {

/// How a strong-metric-dimension value was obtained.
enum class SdimMethod {
  subset_oracle,     ///< exhaustive search over vertex subsets
  vertex_cover,      ///< minimum vertex cover of the mutual-max-distance graph
  diameter2_clique,  ///< n - omega of the closed-neighborhood quotient
  closed_form,       ///< direct formula on group invariants
};

std::string method_name(SdimMethod method);
SdimMethod method_from_name(const std::string& name);

struct SdimResult {
  int value = 0;
  SdimMethod method = SdimMethod::subset_oracle;
  /// A strong resolving set of size `value`, sorted ascending.
  std::vector<int> witness;
  /// Clique number of the closed-neighborhood quotient when the
  /// diameter-2 route computed one; 0 otherwise.
  int omega_reduced = 0;
};

/// True iff w lies so that one of u, v is on a shortest w-to-other path:
/// d(w,u) = d(w,v) + d(v,u) or d(w,v) = d(w,u) + d(u,v).
/// Requires a connected graph.
bool strongly_resolves(const SimpleGraph& g, int w, int u, int v);

/// True iff every pair of distinct vertices is strongly resolved by some
/// member of `s`. Requires a connected graph.
bool is_strong_resolving_set(const SimpleGraph& g, const std::vector<int>& s);

struct OracleOptions {
  /// Exhaustive search is exponential; graphs beyond the cap raise
  /// CapacityError.
  int max_vertices = 16;
};

/// Minimum strong resolving set by exhaustive search. Feasibility of leaving
/// a vertex set out is monotone (supersets of strong resolving sets are
/// strong resolving), so complements are tried in increasing size until the
/// first infeasible level. Independent of graph-specific theory; used as the
/// ground-truth oracle in tests. Connected graphs only.
SdimResult sdim_subset_oracle(const SimpleGraph& g, const OracleOptions& opts = {});

/// Graph on the same vertex set whose edges join mutually maximally distant
/// pairs: u ~ v iff no neighbor of u is farther from v than u is, and vice
/// versa. Strong resolving sets of g are exactly the vertex covers of this
/// graph. Connected graphs only.
SimpleGraph strong_resolving_graph(const SimpleGraph& g);

/// Strong metric dimension as a minimum vertex cover of
/// strong_resolving_graph(g), found via a maximum independent set
/// (complement clique). Works for any diameter. Connected graphs only.
SdimResult sdim_vertex_cover(const SimpleGraph& g, const CliqueOptions& opts = {});

/// Strong metric dimension of a connected graph of diameter at most 2:
/// n minus the clique number of the quotient by equal closed neighborhoods.
/// The witness keeps one representative of each clique class out of the set.
/// PreconditionError when the diameter exceeds 2 or the graph is
/// disconnected.
SdimResult sdim_diameter2(const SimpleGraph& g, const CliqueOptions& opts = {});

/// True iff the element orders are pairwise distinct and totally ordered by
/// divisibility (o1 | o2 | ... | ok after sorting).
bool is_proper_order_chain(const FiniteGroup& g, const std::vector<int>& elements);

}  // namespace grpdim
