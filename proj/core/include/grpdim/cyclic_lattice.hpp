#pragma once

#include <cstdint>
#include <vector>

#include "grpdim/finite_group.hpp"

namespace grpdim {

/// One cyclic subgroup <g>, stored once no matter how many generators it has.
struct CyclicSubgroup {
  std::vector<int> elements;        // sorted
  std::vector<std::uint64_t> bits;  // membership bitset over group elements
  int generator = 0;                // smallest element generating it
  bool maximal = false;

  bool contains(int x) const { return (bits[x >> 6] >> (x & 63)) & 1u; }
  int size() const { return static_cast<int>(elements.size()); }
};

/// All cyclic subgroups of a group, the inclusion-maximal ones among them, and
/// for every element the set of maximal cyclic subgroups containing it.
class CyclicLattice {
 public:
  explicit CyclicLattice(const FiniteGroup& g);

  const std::vector<CyclicSubgroup>& cyclics() const { return cyclics_; }
  /// Indices into cyclics() of the inclusion-maximal ones, ascending.
  const std::vector<int>& maximal_ids() const { return maximal_ids_; }
  const CyclicSubgroup& cyclic(int id) const { return cyclics_[id]; }

  /// Index into cyclics() of <x>.
  int generated_id(int x) const { return generated_id_[x]; }
  const CyclicSubgroup& generated_by(int x) const { return cyclics_[generated_id_[x]]; }

  /// Positions within maximal_ids() of the maximal cyclic subgroups containing
  /// x, ascending. Two elements lie in a common cyclic subgroup iff their
  /// membership lists intersect.
  const std::vector<int>& membership(int x) const { return membership_[x]; }

  int group_order() const { return n_; }

 private:
  int n_ = 0;
  std::vector<CyclicSubgroup> cyclics_;
  std::vector<int> maximal_ids_;
  std::vector<int> generated_id_;
  std::vector<std::vector<int>> membership_;
};

/// Convenience builder mirroring order_profile().
CyclicLattice cyclic_lattice(const FiniteGroup& g);

}  // namespace grpdim
