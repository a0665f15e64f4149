#include "grpdim/cyclic_lattice.hpp"

#include <algorithm>
#include <map>

namespace grpdim {

CyclicLattice::CyclicLattice(const FiniteGroup& g) : n_(g.order()) {
  const int words = (n_ + 63) / 64;
  generated_id_.assign(n_, -1);

  std::map<std::vector<int>, int> seen;
  for (int x = 0; x < n_; ++x) {
    std::vector<int> elems;
    int y = 0;
    do {
      elems.push_back(y);
      y = g.mul(y, x);
    } while (y != 0);
    std::sort(elems.begin(), elems.end());

    auto [it, fresh] = seen.emplace(std::move(elems), static_cast<int>(cyclics_.size()));
    if (fresh) {
      CyclicSubgroup c;
      c.elements = it->first;
      c.bits.assign(words, 0);
      for (int e : c.elements) c.bits[e >> 6] |= std::uint64_t{1} << (e & 63);
      c.generator = x;  // x ascending, so the first generator seen is smallest
      cyclics_.push_back(std::move(c));
    }
    generated_id_[x] = it->second;
  }

  // Maximality by pairwise containment; sizes prune most comparisons.
  auto subset_of = [&](const CyclicSubgroup& a, const CyclicSubgroup& b) {
    for (int w = 0; w < words; ++w)
      if (a.bits[w] & ~b.bits[w]) return false;
    return true;
  };
  for (std::size_t i = 0; i < cyclics_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cyclics_.size() && maximal; ++j)
      if (j != i && cyclics_[i].size() < cyclics_[j].size() &&
          subset_of(cyclics_[i], cyclics_[j]))
        maximal = false;
    cyclics_[i].maximal = maximal;
    if (maximal) maximal_ids_.push_back(static_cast<int>(i));
  }

  membership_.assign(n_, {});
  for (int pos = 0; pos < static_cast<int>(maximal_ids_.size()); ++pos)
    for (int e : cyclics_[maximal_ids_[pos]].elements) membership_[e].push_back(pos);
}

CyclicLattice cyclic_lattice(const FiniteGroup& g) { return CyclicLattice(g); }

}  // namespace grpdim
