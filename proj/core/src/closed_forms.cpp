#include "grpdim/closed_forms.hpp"

#include <algorithm>
#include <set>

#include "grpdim/errors.hpp"
#include "grpdim/numbers.hpp"

namespace grpdim {

namespace {

FormulaReport base_report(GraphFamily family, const FiniteGroup& g,
                          const ElementOrderProfile& profile) {
  FormulaReport r;
  r.family = family;
  r.n = g.order();
  r.omega_n = big_omega(g.order());
  r.lambda = profile.lambda;
  r.exponent = static_cast<int>(profile.exponent);
  r.max_big_omega = profile.max_big_omega;
  return r;
}

}  // namespace

FormulaReport sdim_order_supergraph(const FiniteGroup& g) {
  return sdim_order_supergraph(g, order_profile(g));
}

FormulaReport sdim_order_supergraph(const FiniteGroup& g, const ElementOrderProfile& profile) {
  FormulaReport r = base_report(GraphFamily::supergraph, g, profile);
  if (r.n == 1) {
    r.branch = "degenerate";
    r.omega_reduced = 1;
  } else if (profile.is_p_group) {
    // Any two prime-power orders divide one another, so the graph is
    // complete and collapses to a single neighborhood class.
    r.branch = "p_group";
    r.omega_reduced = 1;
  } else if (profile.is_cyclic) {
    r.branch = "cyclic_non_p";
    r.omega_reduced = r.omega_n;
  } else if (profile.is_cp_group) {
    r.branch = "cp_non_p";
    r.omega_reduced = 2;
  } else {
    // omega_reduced is the longest chain of neighborhood classes. A chain
    // realizing lambda + 1 classes lives inside a cyclic subgroup whose order
    // attains lambda; when the exponent is attained, its class merges with
    // the identity's and the chain is one shorter.
    const int lambda = *profile.lambda;
    r.branch = profile.exponent_attained ? "general_exp_attained" : "general";
    r.omega_reduced = profile.exponent_attained ? lambda : lambda + 1;
  }
  r.value = r.n - r.omega_reduced;
  return r;
}

bool supergraph_same_class(const ElementOrderProfile& profile, int x, int y) {
  const int n = static_cast<int>(profile.orders.size());
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw InputError("supergraph_same_class: element index out of range");
  if (n == 1 || profile.is_p_group)
    throw PreconditionError(
        "supergraph_same_class: the group order needs two distinct prime divisors "
        "(the order supergraph of a p-group is complete)");
  if (x == y) return true;

  int a = profile.orders[x];
  int b = profile.orders[y];
  if (a == b) return true;
  if (a > b) std::swap(a, b);
  if (a == 1) return b == profile.exponent;

  // Powers of one prime merge when the smaller order has no mixed multiple:
  // otherwise an element of order a*q is adjacent to the order-a element
  // but not to the order-b one.
  const auto fa = factorize(a);
  const auto fb = factorize(b);
  if (fa.size() != 1 || fb.size() != 1 || fa[0].first != fb[0].first) return false;
  const long long p = fa[0].first;
  for (int t : profile.pi_e) {
    if (t <= a || t % a != 0) continue;
    const int q = t / a;
    if (q != p && is_prime(q)) return false;
  }
  return true;
}

FormulaReport sdim_enhanced(const FiniteGroup& g) {
  return sdim_enhanced(g, order_profile(g), cyclic_lattice(g));
}

FormulaReport sdim_enhanced(const FiniteGroup& g, const ElementOrderProfile& profile,
                            const CyclicLattice& lattice) {
  FormulaReport r = base_report(GraphFamily::enhanced, g, profile);
  if (r.n == 1) {
    r.branch = "degenerate";
    r.omega_reduced = 1;
  } else if (profile.is_cyclic) {
    // One maximal cyclic subgroup containing everything: complete graph.
    r.branch = "cyclic";
    r.omega_reduced = 1;
  } else {
    r.branch = "general";
    r.omega_reduced = enhanced_max_signature_classes(lattice);
  }
  r.value = r.n - r.omega_reduced;
  return r;
}

int enhanced_max_signature_classes(const CyclicLattice& lattice) {
  int best = 0;
  for (int mid : lattice.maximal_ids()) {
    std::set<std::vector<int>> signatures;
    for (int x : lattice.cyclic(mid).elements) signatures.insert(lattice.membership(x));
    best = std::max(best, static_cast<int>(signatures.size()));
  }
  return best;
}

std::vector<int> enhanced_component_class(const CyclicLattice& lattice, int g) {
  const int n = lattice.group_order();
  if (g < 0 || g >= n) throw InputError("enhanced_component_class: element index out of range");
  const std::vector<int>& in = lattice.membership(g);

  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> acc(words, ~std::uint64_t{0});
  const auto& maximal_ids = lattice.maximal_ids();
  for (std::size_t pos = 0; pos < maximal_ids.size(); ++pos) {
    const auto& bits = lattice.cyclic(maximal_ids[pos]).bits;
    const bool contains_g =
        std::binary_search(in.begin(), in.end(), static_cast<int>(pos));
    for (std::size_t w = 0; w < words; ++w)
      acc[w] = contains_g ? (acc[w] & bits[w]) : (acc[w] & ~bits[w]);
  }

  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if ((acc[x >> 6] >> (x & 63)) & 1u) out.push_back(x);
  return out;
}

int sdim_enhanced_abelian_p(const FiniteGroup& g, const ElementOrderProfile& profile) {
  if (!profile.is_p_group || profile.is_cyclic || !g.is_abelian())
    throw PreconditionError(
        "sdim_enhanced_abelian_p: requires a non-cyclic abelian p-group");
  const int m = big_omega(profile.exponent);
  return g.order() - m - 1;
}

FormulaReport sdim_reduced(const FiniteGroup& g) {
  return sdim_reduced(g, order_profile(g));
}

FormulaReport sdim_reduced(const FiniteGroup& g, const ElementOrderProfile& profile) {
  FormulaReport r = base_report(GraphFamily::reduced_power, g, profile);
  if (r.n == 1) {
    r.branch = "degenerate";
    r.omega_reduced = 1;
  } else if (profile.is_cyclic && profile.is_p_group && profile.p == 2) {
    // Order 2^k: the longest chain of generated subgroups has k + 1 classes,
    // but the identity and the unique involution share a neighborhood.
    r.branch = "cyclic_2_group";
    r.omega_reduced = r.omega_n;
  } else if (profile.is_generalized_quaternion) {
    r.branch = "generalized_quaternion";
    r.omega_reduced = profile.quaternion_t + 1;
  } else {
    r.branch = "general";
    r.omega_reduced = profile.max_big_omega + 1;
  }
  r.value = r.n - r.omega_reduced;
  return r;
}

bool reduced_power_same_class(const ElementOrderProfile& profile, int x, int y) {
  const int n = static_cast<int>(profile.orders.size());
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw InputError("reduced_power_same_class: element index out of range");
  if (x == y) return true;
  const bool cyclic_2 = profile.is_cyclic && profile.is_p_group && profile.p == 2;
  if (!cyclic_2 && !profile.is_generalized_quaternion) return false;
  const int z = *profile.unique_involution;
  return (x == FiniteGroup::identity() && y == z) || (y == FiniteGroup::identity() && x == z);
}

int reduced_power_clique_number(const ElementOrderProfile& profile) {
  return profile.max_big_omega + 1;
}

FormulaReport sdim_formula(const FiniteGroup& g, GraphFamily family) {
  switch (family) {
    case GraphFamily::supergraph: return sdim_order_supergraph(g);
    case GraphFamily::enhanced: return sdim_enhanced(g);
    case GraphFamily::reduced_power: return sdim_reduced(g);
    case GraphFamily::power:
      throw InputError(
          "no direct formula is implemented for the power graph; "
          "use the diameter2, vertexcover, or oracle method");
  }
  throw InputError("sdim_formula: unknown graph family");
}

}  // namespace grpdim
