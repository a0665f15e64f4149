#pragma once

#include <vector>

#include "grpdim/simple_graph.hpp"

namespace grpdim {

/// Quotient of a graph by the relation N[x] = N[y] (equal closed
/// neighborhoods). Classes are numbered by their smallest member, ascending,
/// and each class is represented by that smallest member.
struct ReducedGraph {
  std::vector<std::vector<int>> classes;  // sorted members per class
  std::vector<int> representative;        // representative[c] = min of classes[c]
  std::vector<int> class_of;              // class index per source vertex
  SimpleGraph quotient;                   // one vertex per class

  int class_count() const { return static_cast<int>(classes.size()); }
};

ReducedGraph reduced_graph(const SimpleGraph& g);

}  // namespace grpdim
