#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grpdim/cyclic_lattice.hpp"
#include "grpdim/finite_group.hpp"
#include "grpdim/graph_builders.hpp"
#include "grpdim/order_profile.hpp"

namespace grpdim {

/// Result of a direct strong-metric-dimension formula, together with the
/// group invariants it was computed from. Serialized by the CLI with stable
/// field names: family, branch, value, n, omega_n, lambda, exponent,
/// max_big_omega, omega_reduced.
struct FormulaReport {
  GraphFamily family = GraphFamily::supergraph;
  std::string branch;        ///< which case of the formula fired
  int value = 0;             ///< the strong metric dimension
  int n = 0;                 ///< group order
  int omega_n = 0;           ///< prime factors of n, with multiplicity
  std::optional<int> lambda; ///< max big-omega over composite-with-two-primes orders
  int exponent = 0;          ///< lcm of element orders
  int max_big_omega = 0;     ///< max big-omega over all element orders
  int omega_reduced = 0;     ///< clique number of the closed-neighborhood quotient
};

/// Strong metric dimension of the order supergraph, by case analysis on the
/// element-order profile. Branches:
///   degenerate            n = 1, value 0
///   p_group               the graph is complete, value n - 1
///   cyclic_non_p          value n - Omega(n)
///   cp_non_p              every order a prime power, >= 2 primes: value n - 2
///   general               exponent not an element order: value n - lambda - 1
///   general_exp_attained  exponent is an element order: value n - lambda
/// The last branch differs from general because an element of exponent order
/// shares its closed neighborhood with the identity, shortening the longest
/// chain of neighborhood classes by one. In every branch the value equals
/// n - omega_reduced.
FormulaReport sdim_order_supergraph(const FiniteGroup& g);
FormulaReport sdim_order_supergraph(const FiniteGroup& g, const ElementOrderProfile& profile);

/// True iff x and y have equal closed neighborhoods in the order supergraph,
/// decided from orders alone: o(x) = o(y), or {o(x), o(y)} = {1, exp(G)}, or
/// both are powers of one prime p with the smaller order p^k admitting no
/// mixed multiple p^k * q in the element orders. Only valid when |G| has at
/// least two distinct prime divisors (the supergraph of a p-group is
/// complete); PreconditionError otherwise.
bool supergraph_same_class(const ElementOrderProfile& profile, int x, int y);

/// Strong metric dimension of the enhanced power graph:
/// n minus the largest number of distinct membership signatures M_x found
/// within one maximal cyclic subgroup. Branches: degenerate, cyclic
/// (complete graph, n - 1), general.
FormulaReport sdim_enhanced(const FiniteGroup& g);
FormulaReport sdim_enhanced(const FiniteGroup& g, const ElementOrderProfile& profile,
                            const CyclicLattice& lattice);

/// The signature count maximized by sdim_enhanced: for each maximal cyclic
/// subgroup M, the number of distinct values of membership(x) over x in M.
int enhanced_max_signature_classes(const CyclicLattice& lattice);

/// The set of elements sharing g's maximal-cyclic memberships, computed by
/// set algebra: intersection of the maximal cyclics containing g minus the
/// union of those not containing g. Sorted ascending. Equals the class
/// {x : membership(x) = membership(g)}.
std::vector<int> enhanced_component_class(const CyclicLattice& lattice, int g);

/// Shortcut for non-cyclic abelian p-groups of exponent p^m:
/// sdim of the enhanced power graph is n - m - 1.
/// PreconditionError when the group is not a non-cyclic abelian p-group.
int sdim_enhanced_abelian_p(const FiniteGroup& g, const ElementOrderProfile& profile);

/// Strong metric dimension of the reduced power graph. Branches:
///   degenerate              n = 1, value 0
///   cyclic_2_group          value 2^k - k for order 2^k (k >= 1)
///   generalized_quaternion  value 2^(t+2) - t - 1 for order 4 * 2^t
///   general                 value n - maxOmega - 1
FormulaReport sdim_reduced(const FiniteGroup& g);
FormulaReport sdim_reduced(const FiniteGroup& g, const ElementOrderProfile& profile);

/// True iff x and y have equal closed neighborhoods in the reduced power
/// graph: exactly when the group is a cyclic or generalized quaternion
/// 2-group and {x, y} = {identity, the unique involution}.
bool reduced_power_same_class(const ElementOrderProfile& profile, int x, int y);

/// Clique number of the reduced power graph itself:
/// 1 + max big-omega over element orders.
int reduced_power_clique_number(const ElementOrderProfile& profile);

/// Dispatch to the family's formula; InputError for the plain power graph,
/// which has no closed form here.
FormulaReport sdim_formula(const FiniteGroup& g, GraphFamily family);

}  // namespace grpdim
