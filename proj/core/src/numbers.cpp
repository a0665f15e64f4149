#include "grpdim/numbers.hpp"

#include <numeric>
#include <stdexcept>

namespace grpdim {

std::vector<std::pair<long long, int>> factorize(long long m) {
  if (m < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

int big_omega(long long m) {
  int total = 0;
  for (const auto& [p, e] : factorize(m)) {
    (void)p;
    total += e;
  }
  return total;
}

bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long p = 2; p * p <= m; ++p)
    if (m % p == 0) return false;
  return true;
}

bool is_prime_power(long long m) {
  return m > 1 && factorize(m).size() == 1;
}

long long euler_phi(long long m) {
  long long result = m;
  for (const auto& [p, e] : factorize(m)) {
    (void)e;
    result -= result / p;
  }
  return result;
}

long long lcm(long long a, long long b) { return std::lcm(a, b); }

}  // namespace grpdim
