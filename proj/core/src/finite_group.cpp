#include "grpdim/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "grpdim/errors.hpp"
#include "grpdim/numbers.hpp"

namespace grpdim {

namespace {

[[noreturn]] void reject(const std::string& name, const std::string& why) {
  throw InputError("group '" + name + "': " + why);
}

void check_order_cap(long long n, const std::string& name) {
  if (n > kMaxGroupOrder)
    throw CapacityError("group '" + name + "': order " + std::to_string(n) +
                        " exceeds the table cap of " + std::to_string(kMaxGroupOrder));
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<int> table, int n, std::string name)
    : n_(n), table_(std::move(table)), name_(std::move(name)) {}

FiniteGroup make_trusted_group(std::vector<int> table, int n, std::string name) {
  // Construction paths below produce tables that are groups with identity 0 by
  // construction; the cheap O(n^2) checks still run as a guard, only the O(n^3)
  // associativity scan is skipped.
  FiniteGroup g(std::move(table), n, std::move(name));
  g.check_latin_square();
  g.check_identity_and_inverses();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("group '" + name + "': empty table");
  check_order_cap(n, name);
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      reject(name, "row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                       " entries, expected " + std::to_string(n));
    for (int v : table[i]) {
      if (v < 0 || v >= n)
        reject(name, "entry " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
      flat.push_back(v);
    }
  }
  FiniteGroup g(std::move(flat), n, std::move(name));
  g.check_latin_square();
  g.normalize_identity();
  g.check_associativity();
  g.check_identity_and_inverses();
  return g;
}

void FiniteGroup::check_latin_square() const {
  std::vector<char> seen(n_);
  for (int i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n_; ++j) {
      const int v = mul(i, j);
      if (seen[v])
        reject(name_, "row " + std::to_string(i) + " is not a permutation (value " +
                          std::to_string(v) + " repeats)");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n_; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n_; ++i) {
      const int v = mul(i, j);
      if (seen[v])
        reject(name_, "column " + std::to_string(j) + " is not a permutation (value " +
                          std::to_string(v) + " repeats)");
      seen[v] = 1;
    }
  }
}

void FiniteGroup::normalize_identity() {
  int e = -1;
  for (int i = 0; i < n_; ++i) {
    bool left = true, right = true;
    for (int j = 0; j < n_ && (left || right); ++j) {
      if (mul(i, j) != j) left = false;
      if (mul(j, i) != j) right = false;
    }
    if (left && right) {
      e = i;
      break;
    }
  }
  if (e < 0) reject(name_, "no two-sided identity element");
  if (e == 0) return;
  // Relabel by the transposition swapping 0 and e.
  auto relabel = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
  std::vector<int> fresh(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      fresh[static_cast<std::size_t>(i) * n_ + j] = relabel(mul(relabel(i), relabel(j)));
  table_ = std::move(fresh);
}

void FiniteGroup::check_identity_and_inverses() {
  for (int j = 0; j < n_; ++j)
    if (mul(0, j) != j || mul(j, 0) != j)
      reject(name_, "element 0 is not a two-sided identity after relabeling");
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0)
      reject(name_, "element " + std::to_string(a) + " has no two-sided inverse");
  }
}

void FiniteGroup::check_associativity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const int ij = mul(i, j);
      for (int k = 0; k < n_; ++k)
        if (mul(ij, k) != mul(i, mul(j, k)))
          reject(name_, "not associative at (" + std::to_string(i) + "," + std::to_string(j) +
                            "," + std::to_string(k) + "): (" + std::to_string(i) + "*" +
                            std::to_string(j) + ")*" + std::to_string(k) + " = " +
                            std::to_string(mul(ij, k)) + " but " + std::to_string(i) + "*(" +
                            std::to_string(j) + "*" + std::to_string(k) + ") = " +
                            std::to_string(mul(i, mul(j, k))));
    }
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

namespace {

FiniteGroup make_cyclic(int k) {
  const std::string name = "Z" + std::to_string(k);
  if (k < 1) throw InputError("group '" + name + "': order must be >= 1");
  check_order_cap(k, name);
  std::vector<int> t(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[static_cast<std::size_t>(i) * k + j] = (i + j) % k;
  return make_trusted_group(std::move(t), k, name);
}

// Dihedral group of order 2m: elements i < m are rotations r^i, elements
// m + i are reflections r^i s, with s r = r^-1 s.
FiniteGroup make_dihedral(int order) {
  const std::string name = "D" + std::to_string(order);
  if (order < 2 || order % 2 != 0)
    throw InputError("group '" + name + "': dihedral order must be even and >= 2");
  check_order_cap(order, name);
  const int m = order / 2;
  auto rot = [&](int i) { return ((i % m) + m) % m; };
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  auto idx = [&](int i, int f) { return f == 0 ? i : m + i; };
  for (int i = 0; i < m; ++i)
    for (int f = 0; f < 2; ++f)
      for (int j = 0; j < m; ++j)
        for (int g = 0; g < 2; ++g) {
          const int rr = f == 0 ? rot(i + j) : rot(i - j);
          t[static_cast<std::size_t>(idx(i, f)) * order + idx(j, g)] = idx(rr, f ^ g);
        }
  return make_trusted_group(std::move(t), order, name);
}

// Generalized quaternion group of order 4k: presented by x, y with
// x^(2k) = e, y^2 = x^k, y^-1 x y = x^-1. Elements i < 2k are x^i and
// elements 2k + i are x^i y.
FiniteGroup make_generalized_quaternion(int order) {
  const std::string name = "Q" + std::to_string(order);
  if (order < 8 || order % 4 != 0)
    throw InputError("group '" + name + "': order must be a multiple of 4 and >= 8");
  check_order_cap(order, name);
  const int k = order / 4;
  const int m = 2 * k;
  auto pow = [&](int i) { return ((i % m) + m) % m; };
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  auto idx = [&](int i, int f) { return f == 0 ? i : m + i; };
  for (int i = 0; i < m; ++i)
    for (int f = 0; f < 2; ++f)
      for (int j = 0; j < m; ++j)
        for (int g = 0; g < 2; ++g) {
          int r, h;
          if (f == 0) {
            r = pow(i + j);
            h = g;
          } else if (g == 0) {
            r = pow(i - j);
            h = 1;
          } else {
            r = pow(i - j + k);  // y^2 = x^k
            h = 0;
          }
          t[static_cast<std::size_t>(idx(i, f)) * order + idx(j, g)] = idx(r, h);
        }
  return make_trusted_group(std::move(t), order, name);
}

FiniteGroup make_symmetric(int k) {
  const std::string name = "S" + std::to_string(k);
  if (k < 1 || k > 6)
    throw InputError("group '" + name + "': symmetric groups are supported for 1 <= k <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  check_order_cap(n, name);
  // Identity is the first permutation in lexicographic order, index 0.
  auto rank_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  std::vector<int> comp(k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < k; ++s) comp[s] = perms[i][perms[j][s]];  // (p_i . p_j)(s)
      t[static_cast<std::size_t>(i) * n + j] = rank_of(comp);
    }
  return make_trusted_group(std::move(t), n, name);
}

FiniteGroup make_elementary_abelian(int p, int k) {
  const std::string name = "E" + std::to_string(p) + "^" + std::to_string(k);
  if (!is_prime(p)) throw InputError("group '" + name + "': base must be prime");
  if (k < 1) throw InputError("group '" + name + "': exponent must be >= 1");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    check_order_cap(n, name);
  }
  FiniteGroup g = make_cyclic(p);
  for (int i = 1; i < k; ++i) g = direct_product(g, make_cyclic(p));
  // Rebuild under the canonical name (the fold names it Z<p>xZ<p>x...).
  std::vector<int> t(static_cast<std::size_t>(g.order()) * g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) t[static_cast<std::size_t>(a) * g.order() + b] = g.mul(a, b);
  return make_trusted_group(std::move(t), g.order(), name);
}

int parse_positive_int(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError("descriptor '" + s + "': expected a positive integer for " + what);
  long long v = 0;
  for (char c : s) {
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw InputError("descriptor '" + s + "': number too large");
  }
  if (v < 1) throw InputError("descriptor '" + s + "': expected a positive integer for " + what);
  return static_cast<int>(v);
}

FiniteGroup build_atom(const std::string& atom) {
  if (atom.empty()) throw InputError("empty group descriptor");
  const char head = atom[0];
  const std::string rest = atom.substr(1);
  switch (head) {
    case 'Z':
      return make_cyclic(parse_positive_int(rest, "the cyclic group order"));
    case 'D':
      return make_dihedral(parse_positive_int(rest, "the dihedral group order"));
    case 'Q':
      return make_generalized_quaternion(parse_positive_int(rest, "the quaternion group order"));
    case 'S':
      return make_symmetric(parse_positive_int(rest, "the symmetric group degree"));
    case 'E': {
      const auto caret = rest.find('^');
      if (caret == std::string::npos)
        throw InputError("descriptor '" + atom + "': elementary abelian groups are written E<p>^<k>");
      const int p = parse_positive_int(rest.substr(0, caret), "the prime");
      const int k = parse_positive_int(rest.substr(caret + 1), "the exponent");
      return make_elementary_abelian(p, k);
    }
    default:
      throw InputError("unrecognized group descriptor '" + atom +
                       "' (expected Z<k>, D<2k>, Q<4k>, E<p>^<k>, S<k>, a product of these, "
                       "or file:<path>)");
  }
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const long long n = static_cast<long long>(a.order()) * b.order();
  const std::string name = a.name() + "x" + b.name();
  check_order_cap(n, name);
  const int nb = b.order(), nn = static_cast<int>(n);
  std::vector<int> t(static_cast<std::size_t>(nn) * nn);
  for (int a1 = 0; a1 < a.order(); ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < a.order(); ++a2)
        for (int b2 = 0; b2 < nb; ++b2) {
          const int lhs = a1 * nb + b1, rhs = a2 * nb + b2;
          t[static_cast<std::size_t>(lhs) * nn + rhs] = a.mul(a1, a2) * nb + b.mul(b1, b2);
        }
  return make_trusted_group(std::move(t), nn, name);
}

FiniteGroup build_group(const std::string& descriptor) {
  std::string spec = descriptor;
  // Trim surrounding whitespace.
  const auto first = spec.find_first_not_of(" \t");
  if (first == std::string::npos) throw InputError("empty group descriptor");
  spec = spec.substr(first, spec.find_last_not_of(" \t") - first + 1);

  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    if (path.empty()) throw InputError("descriptor 'file:': missing path");
    return read_cayley_table_file(path);
  }

  // Split on 'x' and fold the product left to right.
  std::vector<std::string> atoms;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      atoms.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  atoms.push_back(cur);

  FiniteGroup g = build_atom(atoms[0]);
  for (std::size_t i = 1; i < atoms.size(); ++i) g = direct_product(g, build_atom(atoms[i]));
  return g;
}

FiniteGroup read_cayley_table(std::istream& in, const std::string& name) {
  long long n = 0;
  if (!(in >> n)) throw InputError("table '" + name + "': missing order line");
  if (n < 1) throw InputError("table '" + name + "': order must be >= 1");
  check_order_cap(n, name);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      long long v;
      if (!(in >> v))
        throw InputError("table '" + name + "': truncated at row " + std::to_string(i) +
                         ", column " + std::to_string(j));
      if (v < 0 || v >= n)
        throw InputError("table '" + name + "': entry " + std::to_string(v) +
                         " out of range 0.." + std::to_string(n - 1));
      table[i][j] = static_cast<int>(v);
    }
  return FiniteGroup::from_table(std::move(table), name);
}

FiniteGroup read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open table file '" + path + "'");
  return read_cayley_table(in, "file:" + path);
}

}  // namespace grpdim
