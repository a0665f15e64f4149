#include "grpdim/sdim.hpp"

#include <algorithm>
#include <cstdint>

#include "grpdim/errors.hpp"
#include "grpdim/reduced_graph.hpp"

namespace grpdim {

std::string method_name(SdimMethod method) {
  switch (method) {
    case SdimMethod::subset_oracle: return "oracle";
    case SdimMethod::vertex_cover: return "vertexcover";
    case SdimMethod::diameter2_clique: return "diameter2";
    case SdimMethod::closed_form: return "formula";
  }
  return "unknown";
}

SdimMethod method_from_name(const std::string& name) {
  if (name == "oracle") return SdimMethod::subset_oracle;
  if (name == "vertexcover" || name == "vertex_cover") return SdimMethod::vertex_cover;
  if (name == "diameter2") return SdimMethod::diameter2_clique;
  if (name == "formula") return SdimMethod::closed_form;
  throw InputError("unknown method '" + name +
                   "' (expected oracle, vertexcover, diameter2 or formula)");
}

bool strongly_resolves(const SimpleGraph& g, int w, int u, int v) {
  const int du = g.distance(w, u);
  const int dv = g.distance(w, v);
  const int duv = g.distance(u, v);
  return du == dv + duv || dv == du + duv;
}

bool is_strong_resolving_set(const SimpleGraph& g, const std::vector<int>& s) {
  const int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw InputError("resolving set contains out-of-range vertex");
    in_s[v] = 1;
  }
  // A pair with an endpoint w in s is resolved by w itself, so only pairs
  // entirely outside s need a witness.
  for (int u = 0; u < n; ++u) {
    if (in_s[u]) continue;
    for (int v = u + 1; v < n; ++v) {
      if (in_s[v]) continue;
      bool resolved = false;
      for (int w : s)
        if (strongly_resolves(g, w, u, v)) {
          resolved = true;
          break;
        }
      if (!resolved) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> complement_of(const std::vector<int>& picked, int n) {
  std::vector<char> out(n, 0);
  for (int v : picked) out[v] = 1;
  std::vector<int> rest;
  rest.reserve(n - picked.size());
  for (int v = 0; v < n; ++v)
    if (!out[v]) rest.push_back(v);
  return rest;
}

}  // namespace

SdimResult sdim_subset_oracle(const SimpleGraph& g, const OracleOptions& opts) {
  const int n = g.vertex_count();
  if (n > opts.max_vertices || n > 62)
    throw CapacityError("sdim_subset_oracle: graph has " + std::to_string(n) +
                        " vertices, cap is " + std::to_string(std::min(opts.max_vertices, 62)) +
                        "; use the vertexcover method instead");
  if (!g.is_connected())
    throw PreconditionError("sdim_subset_oracle: graph is disconnected");
  if (n == 1) return {0, SdimMethod::subset_oracle, {}, 0};

  // resolver[u][v]: bitmask over w of witnesses that strongly resolve (u, v).
  std::vector<std::uint64_t> resolver(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t mask = 0;
      for (int w = 0; w < n; ++w)
        if (strongly_resolves(g, w, u, v)) mask |= std::uint64_t{1} << w;
      resolver[static_cast<std::size_t>(u) * n + v] = mask;
    }

  const std::uint64_t all = (n == 62) ? ~std::uint64_t{0} >> 2 : (std::uint64_t{1} << n) - 1;

  // Leaving out a set C works iff every pair inside C has a resolver outside
  // C. Feasibility is monotone under shrinking C, so the first size with no
  // feasible C pins the answer at the previous size.
  std::vector<int> best_out;  // largest feasible left-out set, lexicographically first
  for (int c = 1; c < n; ++c) {
    std::vector<int> idx(c);
    for (int i = 0; i < c; ++i) idx[i] = i;
    bool feasible = false;
    while (true) {
      std::uint64_t c_mask = 0;
      for (int v : idx) c_mask |= std::uint64_t{1} << v;
      const std::uint64_t s_mask = all & ~c_mask;
      bool ok = true;
      for (int a = 0; ok && a < c; ++a)
        for (int b = a + 1; b < c; ++b)
          if (!(resolver[static_cast<std::size_t>(idx[a]) * n + idx[b]] & s_mask)) {
            ok = false;
            break;
          }
      if (ok) {
        feasible = true;
        best_out = idx;
        break;
      }
      // next combination in lexicographic order
      int i = c - 1;
      while (i >= 0 && idx[i] == n - c + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!feasible) break;
  }

  std::vector<int> witness = complement_of(best_out, n);
  return {static_cast<int>(witness.size()), SdimMethod::subset_oracle, std::move(witness), 0};
}

SimpleGraph strong_resolving_graph(const SimpleGraph& g) {
  if (!g.is_connected())
    throw PreconditionError("strong_resolving_graph: graph is disconnected");
  const int n = g.vertex_count();
  g.distances();

  // max_distant(u, v): no neighbor of u is farther from v than u is.
  auto max_distant = [&](int u, int v) {
    const int duv = g.distance(u, v);
    for (int w : g.neighbors(u))
      if (g.distance(w, v) > duv) return false;
    return true;
  };

  SimpleGraph srg(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (max_distant(u, v) && max_distant(v, u)) srg.add_edge(u, v);
  return srg;
}

SdimResult sdim_vertex_cover(const SimpleGraph& g, const CliqueOptions& opts) {
  const int n = g.vertex_count();
  SimpleGraph srg = strong_resolving_graph(g);
  // Minimum vertex cover via maximum independent set, which is a maximum
  // clique of the complement. The cover itself is the witness: strong
  // resolving sets are exactly the vertex covers of srg.
  CliqueResult mis = max_clique(complement(srg), opts);
  std::vector<int> cover = complement_of(mis.witness, n);
  return {static_cast<int>(cover.size()), SdimMethod::vertex_cover, std::move(cover), 0};
}

SdimResult sdim_diameter2(const SimpleGraph& g, const CliqueOptions& opts) {
  const int n = g.vertex_count();
  if (!g.is_connected())
    throw PreconditionError("sdim_diameter2: graph is disconnected");
  if (g.diameter() > 2)
    throw PreconditionError(
        "sdim_diameter2: diameter exceeds 2; use the vertexcover or oracle method instead");

  const ReducedGraph reduced = reduced_graph(g);
  const CliqueResult cq = max_clique(reduced.quotient, opts);

  // Keep one representative of each clique class out; everything else goes in.
  std::vector<char> keep_out(n, 0);
  for (int cls : cq.witness) keep_out[reduced.representative[cls]] = 1;
  std::vector<int> witness;
  witness.reserve(n - cq.size);
  for (int v = 0; v < n; ++v)
    if (!keep_out[v]) witness.push_back(v);

  return {n - cq.size, SdimMethod::diameter2_clique, std::move(witness), cq.size};
}

bool is_proper_order_chain(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> orders;
  orders.reserve(elements.size());
  for (int x : elements) orders.push_back(g.element_order(x));
  std::sort(orders.begin(), orders.end());
  for (std::size_t i = 1; i < orders.size(); ++i)
    if (orders[i] == orders[i - 1] || orders[i] % orders[i - 1] != 0) return false;
  return true;
}

}  // namespace grpdim
