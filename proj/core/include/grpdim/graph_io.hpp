#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grpdim/simple_graph.hpp"

namespace grpdim {

/// Graphviz DOT text. When element orders are supplied, vertex v is labeled
/// "v(o=<order>)", e.g. "5(o=6)"; otherwise plain indices are used.
std::string graph_to_dot(const SimpleGraph& g, const std::string& graph_name,
                         const std::vector<int>* orders = nullptr);

/// Adjacency-list JSON: {"n": <vertices>, "edges": [[u, v], ...]} with u < v
/// and the pairs sorted lexicographically.
std::string graph_to_json(const SimpleGraph& g);

/// Parse the JSON emitted by graph_to_json back into a graph.
SimpleGraph graph_from_json(const std::string& text);

}  // namespace grpdim
