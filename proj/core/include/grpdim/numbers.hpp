#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace grpdim {

/// Prime factorization by trial division, returned as (prime, multiplicity)
/// pairs with primes ascending. factorize(1) is empty.
std::vector<std::pair<long long, int>> factorize(long long m);

/// Number of prime factors counted with multiplicity; big_omega(1) == 0.
int big_omega(long long m);

bool is_prime(long long m);

/// True iff m = p^k for a prime p and k >= 1.
bool is_prime_power(long long m);

/// Euler's totient.
long long euler_phi(long long m);

long long lcm(long long a, long long b);

}  // namespace grpdim
