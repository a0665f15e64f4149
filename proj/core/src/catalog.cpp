#include "grpdim/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "grpdim/errors.hpp"
#include "grpdim/numbers.hpp"

namespace grpdim {

namespace {

long long atom_order(const std::string& atom) {
  if (atom.size() < 2) throw InputError("descriptor_order: bad atom '" + atom + "'");
  const char kind = atom[0];
  const std::string rest = atom.substr(1);
  auto parse = [&](const std::string& s) -> long long {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw InputError("descriptor_order: bad number in '" + atom + "'");
    }
    if (used != s.size() || v < 1)
      throw InputError("descriptor_order: bad number in '" + atom + "'");
    return v;
  };
  switch (kind) {
    case 'Z':
    case 'D':
    case 'Q':
      return parse(rest);
    case 'S': {
      const long long k = parse(rest);
      long long f = 1;
      for (long long i = 2; i <= k; ++i) f *= i;
      return f;
    }
    case 'E': {
      const std::size_t caret = rest.find('^');
      if (caret == std::string::npos)
        throw InputError("descriptor_order: elementary abelian atom needs p^k");
      const long long p = parse(rest.substr(0, caret));
      const long long k = parse(rest.substr(caret + 1));
      long long v = 1;
      for (long long i = 0; i < k; ++i) v *= p;
      return v;
    }
    default:
      throw InputError("descriptor_order: unknown atom '" + atom + "'");
  }
}

}  // namespace

int descriptor_order(const std::string& descriptor) {
  if (descriptor.rfind("file:", 0) == 0)
    throw InputError("descriptor_order: file descriptors have no a priori order");
  long long total = 1;
  std::size_t start = 0;
  while (start <= descriptor.size()) {
    const std::size_t sep = descriptor.find('x', start);
    const std::string atom =
        descriptor.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    total *= atom_order(atom);
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  if (total > 1000000) throw InputError("descriptor_order: order out of range");
  return static_cast<int>(total);
}

std::vector<std::string> catalog_descriptors(int max_order) {
  std::vector<std::string> names;

  for (int k = 1; k <= max_order; ++k) names.push_back("Z" + std::to_string(k));
  for (int m = 4; m <= max_order; m += 2) names.push_back("D" + std::to_string(m));
  for (int m = 8; m <= max_order; m += 4) names.push_back("Q" + std::to_string(m));

  for (long long p = 2; p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    long long pk = p * p;
    for (int k = 2; pk <= max_order; ++k, pk *= p)
      names.push_back("E" + std::to_string(p) + "^" + std::to_string(k));
  }

  long long factorial = 2;
  for (int k = 3; k <= 6; ++k) {
    factorial *= k;
    if (factorial <= max_order) names.push_back("S" + std::to_string(k));
  }

  static const char* const kProducts[] = {
      "Z2xZ4",   "Z2xZ6",     "Z2xS3",     "Z2xZ8",   "Z4xZ4",   "Z2xZ2xZ4",
      "Z2xQ8",   "Z2xD8",     "Z3xZ6",     "Z2xZ10",  "Z2xZ12",  "Z4xS3",
      "Z3xQ8",   "Z2xZ2xZ6",  "Z2xZ2xS3",  "Z3xZ9",   "Z2xZ16",  "Z4xZ8",
      "Z2xZ4xZ4", "Z2xZ2xZ8", "Z2xZ2xZ2xZ4", "Z2xQ16", "Z6xZ6",  "Z3xZ12",
      "Z2xS4",   "Z5xZ10",    "Z6xZ10",
  };
  for (const char* name : kProducts)
    if (descriptor_order(name) <= max_order) names.push_back(name);

  std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    const int oa = descriptor_order(a);
    const int ob = descriptor_order(b);
    return oa != ob ? oa < ob : a < b;
  });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace grpdim
