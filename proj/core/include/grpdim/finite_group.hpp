#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grpdim {

/// A finite group given by its full multiplication table.
///
/// Elements are the integers 0..order()-1 and the identity is always element 0;
/// tables whose identity sits elsewhere are relabeled on construction. The table
/// is validated on every construction path (Latin square, two-sided identity,
/// inverses); full associativity is additionally checked for untrusted tables
/// such as ones read from files.
class FiniteGroup {
 public:
  /// Validate `table` as a group table and normalize the identity to index 0.
  /// Throws InputError with a diagnostic naming the first offending cell or
  /// triple if the table is not a group.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name);

  int order() const { return n_; }
  const std::string& name() const { return name_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  static constexpr int identity() { return 0; }

  /// Smallest k >= 1 with a^k = e.
  int element_order(int a) const;

  bool is_abelian() const;

 private:
  friend FiniteGroup make_trusted_group(std::vector<int> table, int n, std::string name);

  FiniteGroup(std::vector<int> table, int n, std::string name);

  void normalize_identity();
  void check_latin_square() const;
  void check_identity_and_inverses();
  void check_associativity() const;

  int n_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> inverse_;
  std::string name_;
};

/// Build a group from a descriptor:
///   Z<k>            cyclic of order k        (k >= 1)
///   D<2k>           dihedral of order 2k     (even order >= 2; D2 = Z2)
///   Q<4k>           generalized quaternion   (order a multiple of 4, >= 8)
///   E<p>^<k>        elementary abelian p^k   (p prime, k >= 1)
///   S<k>            symmetric on k letters   (1 <= k <= 6)
///   A x B x ...     direct product, left-associative
///   file:<path>     multiplication table file, see read_cayley_table
/// Throws InputError for anything unparseable and CapacityError when the
/// resulting order would exceed the table-size cap.
FiniteGroup build_group(const std::string& descriptor);

/// Direct product with elements indexed (a, b) -> a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Read a multiplication table from a stream: first a line with the order n,
/// then n rows of n integers in 0..n-1 where row i, column j holds i*j.
/// The identity may sit anywhere; it is detected and relabeled to 0.
FiniteGroup read_cayley_table(std::istream& in, const std::string& name);
FiniteGroup read_cayley_table_file(const std::string& path);

/// Largest group order build_group will materialize (tables are dense n*n).
constexpr int kMaxGroupOrder = 2048;

}  // namespace grpdim
