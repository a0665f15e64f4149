#include "grpdim/order_profile.hpp"

#include <algorithm>

#include "grpdim/numbers.hpp"

namespace grpdim {

bool ElementOrderProfile::has_order(long long m) const {
  if (pi_e.empty() || m < 1 || m > pi_e.back()) return false;
  return std::binary_search(pi_e.begin(), pi_e.end(), static_cast<int>(m));
}

ElementOrderProfile order_profile(const FiniteGroup& g) {
  const int n = g.order();
  ElementOrderProfile prof;
  prof.orders.resize(n);
  for (int x = 0; x < n; ++x) prof.orders[x] = g.element_order(x);

  prof.pi_e = prof.orders;
  std::sort(prof.pi_e.begin(), prof.pi_e.end());
  prof.pi_e.erase(std::unique(prof.pi_e.begin(), prof.pi_e.end()), prof.pi_e.end());

  prof.exponent = 1;
  for (int m : prof.pi_e) prof.exponent = lcm(prof.exponent, m);
  prof.exponent_attained = !prof.pi_e.empty() && prof.pi_e.back() == prof.exponent;

  for (int m : prof.pi_e) {
    prof.max_big_omega = std::max(prof.max_big_omega, big_omega(m));
    if (m > 1 && !is_prime_power(m))
      prof.lambda = std::max(prof.lambda.value_or(0), big_omega(m));
  }

  prof.is_cyclic = prof.pi_e.back() == n;

  const auto factors = factorize(n);
  if (factors.size() == 1) {
    prof.is_p_group = true;
    prof.p = factors[0].first;
  }

  prof.is_cp_group = true;
  prof.is_P_group = n > 1;
  for (int m : prof.pi_e) {
    if (m == 1) continue;
    if (!is_prime_power(m)) prof.is_cp_group = false;
    if (!is_prime(m)) prof.is_P_group = false;
  }

  int involutions = 0, the_involution = -1;
  for (int x = 0; x < n; ++x)
    if (prof.orders[x] == 2) {
      ++involutions;
      the_involution = x;
    }
  if (involutions == 1) prof.unique_involution = the_involution;

  // A 2-group with a unique involution is cyclic or generalized quaternion;
  // ruling out cyclic pins the quaternions without any isomorphism search.
  if (prof.is_p_group && prof.p == 2 && !prof.is_cyclic && involutions == 1 && n >= 8) {
    prof.is_generalized_quaternion = true;
    int t = 0;
    for (int m = n / 4; m > 1; m /= 2) ++t;
    prof.quaternion_t = t;
  }

  return prof;
}

}  // namespace grpdim
