#pragma once

#include <string>

#include "grpdim/cyclic_lattice.hpp"
#include "grpdim/finite_group.hpp"
#include "grpdim/order_profile.hpp"
#include "grpdim/simple_graph.hpp"

namespace grpdim {

/// The four graphs attached to a finite group. Vertices are the group
/// elements; x != y are adjacent when:
///   power:         x in <y> or y in <x>
///   enhanced:      some cyclic subgroup contains both
///   supergraph:    o(x) | o(y) or o(y) | o(x)
///   reduced_power: <x> strictly contains <y> or vice versa
enum class GraphFamily { power, enhanced, supergraph, reduced_power };

/// Canonical lowercase name ("power", "enhanced", "supergraph", "reduced_power").
std::string family_name(GraphFamily family);
/// Accepts the canonical names plus the short alias "reduced".
GraphFamily family_from_name(const std::string& name);

SimpleGraph build_graph(const FiniteGroup& g, GraphFamily family);

/// Same, reusing precomputed structure (the profile feeds the supergraph, the
/// lattice feeds the other three).
SimpleGraph build_graph(const FiniteGroup& g, GraphFamily family,
                        const ElementOrderProfile& profile, const CyclicLattice& lattice);

}  // namespace grpdim
