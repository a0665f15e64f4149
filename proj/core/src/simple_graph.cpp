#include "grpdim/simple_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "grpdim/errors.hpp"

namespace grpdim {

SimpleGraph::SimpleGraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw InputError("graph must have at least one vertex");
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

SimpleGraph::SimpleGraph(const SimpleGraph& other)
    : n_(other.n_), words_(other.words_), edges_(other.edges_), adj_(other.adj_) {
  std::lock_guard<std::mutex> lock(other.dist_mutex_);
  dist_ = other.dist_;
}

SimpleGraph& SimpleGraph::operator=(const SimpleGraph& other) {
  if (this == &other) return *this;
  std::shared_ptr<const std::vector<int>> d;
  {
    std::lock_guard<std::mutex> lock(other.dist_mutex_);
    d = other.dist_;
  }
  n_ = other.n_;
  words_ = other.words_;
  edges_ = other.edges_;
  adj_ = other.adj_;
  std::lock_guard<std::mutex> lock(dist_mutex_);
  dist_ = std::move(d);
  return *this;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("add_edge: vertex out of range");
  if (u == v) throw InputError("add_edge: self-loops are not allowed");
  if (adjacent(u, v)) return;
  adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++edges_;
  std::lock_guard<std::mutex> lock(dist_mutex_);
  dist_.reset();  // mutation invalidates any cached distances
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<int> SimpleGraph::closed_neighborhood(int v) const {
  std::vector<int> out = neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

bool SimpleGraph::same_closed_neighborhood(int u, int v) const {
  if (u == v) return true;
  const std::uint64_t* ru = row(u);
  const std::uint64_t* rv = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t a = ru[w], b = rv[w];
    if (w == (u >> 6)) a |= std::uint64_t{1} << (u & 63);
    if (w == (v >> 6)) b |= std::uint64_t{1} << (v & 63);
    if (a != b) return false;
  }
  return true;
}

std::vector<int> SimpleGraph::compute_distances() const {
  std::vector<int> d(static_cast<std::size_t>(n_) * n_, kUnreachable);
  std::vector<int> queue(n_);
  for (int s = 0; s < n_; ++s) {
    int* ds = d.data() + static_cast<std::size_t>(s) * n_;
    int head = 0, tail = 0;
    ds[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      const std::uint64_t* r = row(u);
      for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
          const int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (ds[v] == kUnreachable) {
            ds[v] = ds[u] + 1;
            queue[tail++] = v;
          }
        }
      }
    }
  }
  return d;
}

const std::vector<int>& SimpleGraph::distances() const {
  {
    std::lock_guard<std::mutex> lock(dist_mutex_);
    if (dist_) return *dist_;
  }
  auto fresh = std::make_shared<const std::vector<int>>(compute_distances());
  std::lock_guard<std::mutex> lock(dist_mutex_);
  if (!dist_) dist_ = std::move(fresh);  // first finisher wins
  return *dist_;
}

bool SimpleGraph::is_connected() const {
  const std::vector<int>& d = distances();
  for (int v = 0; v < n_; ++v)
    if (d[v] == kUnreachable) return false;
  return true;
}

int SimpleGraph::diameter() const {
  const std::vector<int>& d = distances();
  int best = 0;
  for (int v : d) {
    if (v == kUnreachable) throw PreconditionError("diameter: graph is disconnected");
    best = std::max(best, v);
  }
  return best;
}

SimpleGraph complement(const SimpleGraph& g) {
  const int n = g.vertex_count();
  SimpleGraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

}  // namespace grpdim
