#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace grpdim {

/// Distance placeholder for vertex pairs with no connecting path.
constexpr int kUnreachable = -1;

/// An undirected simple graph on vertices 0..n-1 with bitset adjacency rows
/// and a lazily computed, cached all-pairs distance table. The cache follows a
/// write-once discipline: concurrent readers either see the finished table or
/// compute one independently, and the first finisher's table is kept.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  SimpleGraph(const SimpleGraph& other);
  SimpleGraph& operator=(const SimpleGraph& other);
  SimpleGraph(SimpleGraph&&) noexcept = default;
  SimpleGraph& operator=(SimpleGraph&&) noexcept = default;

  int vertex_count() const { return n_; }
  long long edge_count() const { return edges_; }
  int words_per_row() const { return words_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  int degree(int v) const;

  const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
  std::vector<int> neighbors(int v) const;

  /// N[v] = neighbors plus v itself, sorted.
  std::vector<int> closed_neighborhood(int v) const;
  /// True iff N[u] = N[v] (closed neighborhoods).
  bool same_closed_neighborhood(int u, int v) const;

  bool is_complete() const { return edges_ == static_cast<long long>(n_) * (n_ - 1) / 2; }
  bool is_connected() const;
  /// Largest finite distance; PreconditionError when disconnected.
  int diameter() const;

  int distance(int u, int v) const { return distances()[static_cast<std::size_t>(u) * n_ + v]; }
  /// Row-major n*n distance table, computed on first use.
  const std::vector<int>& distances() const;

 private:
  std::vector<int> compute_distances() const;

  int n_ = 0;
  int words_ = 0;
  long long edges_ = 0;
  std::vector<std::uint64_t> adj_;

  mutable std::mutex dist_mutex_;
  mutable std::shared_ptr<const std::vector<int>> dist_;
};

/// Complement graph (no self-loops).
SimpleGraph complement(const SimpleGraph& g);

}  // namespace grpdim
