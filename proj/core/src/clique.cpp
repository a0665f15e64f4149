#include "grpdim/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "grpdim/errors.hpp"

namespace grpdim {

namespace {

// Bit helpers over word-array sets.
inline bool test_bit(const std::vector<std::uint64_t>& s, int v) {
  return (s[v >> 6] >> (v & 63)) & 1u;
}
inline void clear_bit(std::vector<std::uint64_t>& s, int v) {
  s[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}
inline void set_bit(std::vector<std::uint64_t>& s, int v) {
  s[v >> 6] |= std::uint64_t{1} << (v & 63);
}
inline bool any_bit(const std::vector<std::uint64_t>& s) {
  for (std::uint64_t w : s)
    if (w) return true;
  return false;
}
inline int pop_count(const std::vector<std::uint64_t>& s) {
  int c = 0;
  for (std::uint64_t w : s) c += std::popcount(w);
  return c;
}

// Smallest-first degeneracy order; within equal degrees the smallest index
// goes first, which keeps every downstream witness deterministic.
std::vector<int> degeneracy_order(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n), order;
  order.reserve(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    removed[best] = 1;
    order.push_back(best);
    for (int u : g.neighbors(best))
      if (!removed[u]) --deg[u];
  }
  return order;
}

class MaxCliqueSolver {
 public:
  MaxCliqueSolver(const SimpleGraph& g, const CliqueOptions& opts)
      : g_(g), n_(g.vertex_count()), words_(g.words_per_row()), budget_(opts.max_nodes) {
    // Relabel so that position i holds the i-th vertex of the reverse
    // degeneracy order; coloring then follows a good static order.
    const std::vector<int> degen = degeneracy_order(g);
    label_.assign(n_, 0);
    position_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      label_[i] = degen[n_ - 1 - i];
      position_[label_[i]] = i;
    }
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
      const int v = label_[i];
      for (int u : g.neighbors(v)) set_bit_at(i, position_[u]);
    }
  }

  CliqueResult run() {
    std::vector<std::uint64_t> cand(words_, 0);
    for (int i = 0; i < n_; ++i) set_bit(cand, i);
    std::vector<int> current;
    expand(cand, current);
    std::sort(best_.begin(), best_.end());
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  void set_bit_at(int i, int j) { set_bit_row(rows_, i, j); }
  void set_bit_row(std::vector<std::uint64_t>& rows, int i, int j) {
    rows[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  }
  const std::uint64_t* row(int i) const { return rows_.data() + static_cast<std::size_t>(i) * words_; }

  // Greedy coloring of the candidate set; returns vertices ordered by color
  // ascending together with their color numbers (1-based upper bounds).
  void color_sort(const std::vector<std::uint64_t>& cand, std::vector<int>& order,
                  std::vector<int>& bound) const {
    order.clear();
    bound.clear();
    std::vector<std::uint64_t> uncolored = cand;
    int color = 0;
    while (any_bit(uncolored)) {
      ++color;
      std::vector<std::uint64_t> avail = uncolored;
      while (true) {
        int v = -1;
        for (int w = 0; w < words_; ++w)
          if (avail[w]) {
            v = w * 64 + std::countr_zero(avail[w]);
            break;
          }
        if (v < 0) break;
        clear_bit(avail, v);
        clear_bit(uncolored, v);
        const std::uint64_t* rv = row(v);
        for (int w = 0; w < words_; ++w) avail[w] &= ~rv[w];
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  void expand(const std::vector<std::uint64_t>& cand, std::vector<int>& current) {
    if (--budget_ < 0)
      throw CapacityError("max_clique: search budget exceeded");
    std::vector<int> order, bound;
    color_sort(cand, order, bound);
    std::vector<std::uint64_t> local = cand;
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (static_cast<int>(current.size()) + bound[idx] <= static_cast<int>(best_.size())) return;
      const int v = order[idx];
      current.push_back(v);
      std::vector<std::uint64_t> next(words_);
      const std::uint64_t* rv = row(v);
      bool nonempty = false;
      for (int w = 0; w < words_; ++w) {
        next[w] = local[w] & rv[w];
        nonempty |= next[w] != 0;
      }
      if (nonempty) {
        expand(next, current);
      } else if (current.size() > best_.size()) {
        best_.clear();
        for (int i : current) best_.push_back(label_[i]);
      }
      current.pop_back();
      clear_bit(local, v);
    }
  }

  const SimpleGraph& g_;
  int n_;
  int words_;
  long long budget_;
  std::vector<int> label_, position_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> best_;
};

}  // namespace

CliqueResult max_clique(const SimpleGraph& g, const CliqueOptions& opts) {
  if (g.vertex_count() > opts.max_vertices)
    throw CapacityError("max_clique: graph has " + std::to_string(g.vertex_count()) +
                        " vertices, cap is " + std::to_string(opts.max_vertices));
  MaxCliqueSolver solver(g, opts);
  return solver.run();
}

int clique_number(const SimpleGraph& g, const CliqueOptions& opts) {
  return max_clique(g, opts).size;
}

namespace {

void bron_kerbosch(const SimpleGraph& g, std::vector<std::uint64_t>& r,
                   std::vector<std::uint64_t> p, std::vector<std::uint64_t> x,
                   std::vector<std::vector<int>>& out, std::size_t limit) {
  const int words = g.words_per_row();
  if (!any_bit(p) && !any_bit(x)) {
    if (out.size() >= limit) throw CapacityError("maximal_cliques: clique limit exceeded");
    std::vector<int> clique;
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        clique.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    out.push_back(std::move(clique));
    return;
  }

  // Pivot: vertex of P u X maximizing |P cap N(pivot)|, smallest index first.
  int pivot = -1, pivot_gain = -1;
  for (int w = 0; w < words; ++w) {
    std::uint64_t bits = p[w] | x[w];
    while (bits) {
      const int v = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      int gain = 0;
      const std::uint64_t* rv = g.row(v);
      for (int ww = 0; ww < words; ++ww) gain += std::popcount(p[ww] & rv[ww]);
      if (gain > pivot_gain) {
        pivot_gain = gain;
        pivot = v;
      }
    }
  }

  std::vector<std::uint64_t> ext(words);
  const std::uint64_t* rp = g.row(pivot);
  for (int w = 0; w < words; ++w) ext[w] = p[w] & ~rp[w];

  for (int w = 0; w < words; ++w) {
    std::uint64_t bits = ext[w];
    while (bits) {
      const int v = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      const std::uint64_t* rv = g.row(v);
      std::vector<std::uint64_t> p2(words), x2(words);
      for (int ww = 0; ww < words; ++ww) {
        p2[ww] = p[ww] & rv[ww];
        x2[ww] = x[ww] & rv[ww];
      }
      set_bit(r, v);
      bron_kerbosch(g, r, std::move(p2), std::move(x2), out, limit);
      clear_bit(r, v);
      clear_bit(p, v);
      set_bit(x, v);
    }
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g, std::size_t limit) {
  const int n = g.vertex_count();
  const int words = g.words_per_row();
  std::vector<std::uint64_t> r(words, 0), p(words, 0), x(words, 0);
  for (int v = 0; v < n; ++v) set_bit(p, v);
  std::vector<std::vector<int>> out;
  bron_kerbosch(g, r, std::move(p), std::move(x), out, limit);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grpdim
