#pragma once

#include <optional>
#include <vector>

#include "grpdim/finite_group.hpp"

namespace grpdim {

/// Per-element orders plus the derived order-theoretic classification of a group.
struct ElementOrderProfile {
  std::vector<int> orders;      // orders[x] = o(x)
  std::vector<int> pi_e;        // sorted distinct element orders
  long long exponent = 1;       // lcm of pi_e
  bool exponent_attained = false;  // some element has order exp(G)

  /// max big_omega(m) over element orders m that are not prime powers;
  /// absent when every element order is a prime power.
  std::optional<int> lambda;
  int max_big_omega = 0;  // max big_omega(m) over all element orders

  bool is_cyclic = false;
  bool is_p_group = false;
  long long p = 0;  // the prime when is_p_group
  bool is_cp_group = false;  // every nontrivial element order is a prime power
  bool is_P_group = false;   // nontrivial group, every nontrivial element order prime
  bool is_generalized_quaternion = false;
  int quaternion_t = 0;                  // order = 4 * 2^t when is_generalized_quaternion
  std::optional<int> unique_involution;  // set iff exactly one element of order 2

  bool has_order(long long m) const;
};

/// Compute orders by repeated multiplication and classify the group.
ElementOrderProfile order_profile(const FiniteGroup& g);

}  // namespace grpdim
