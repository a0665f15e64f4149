#pragma once

#include <string>
#include <vector>

namespace grpdim {

/// Descriptors of the built-in verification catalog, restricted to groups of
/// order at most max_order: every cyclic group, dihedral groups of order >= 4,
/// dicyclic groups of order 8, 12, 16, ..., elementary abelian groups p^k
/// with k >= 2, symmetric groups S3..S6, and a fixed list of direct products.
/// Sorted by (order, descriptor), no duplicates.
std::vector<std::string> catalog_descriptors(int max_order);

/// The order of the group a descriptor denotes, computed arithmetically
/// without building the multiplication table. Rejects file: descriptors.
int descriptor_order(const std::string& descriptor);

}  // namespace grpdim
