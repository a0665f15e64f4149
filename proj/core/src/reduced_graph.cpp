#include "grpdim/reduced_graph.hpp"

namespace grpdim {

ReducedGraph reduced_graph(const SimpleGraph& g) {
  const int n = g.vertex_count();

  std::vector<int> class_of(n, -1);
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < n; ++v) {
    if (class_of[v] >= 0) continue;
    const int c = static_cast<int>(classes.size());
    classes.push_back({v});
    class_of[v] = c;
    for (int u = v + 1; u < n; ++u)
      if (class_of[u] < 0 && g.same_closed_neighborhood(v, u)) {
        class_of[u] = c;
        classes[c].push_back(u);
      }
  }

  const int k = static_cast<int>(classes.size());
  ReducedGraph out{std::move(classes), {}, std::move(class_of), SimpleGraph(k)};
  out.representative.reserve(k);
  for (const auto& cls : out.classes) out.representative.push_back(cls.front());

  // Adjacency between classes is rep-to-rep adjacency; equal closed
  // neighborhoods make this independent of the chosen members.
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(out.representative[a], out.representative[b])) out.quotient.add_edge(a, b);

  return out;
}

}  // namespace grpdim
