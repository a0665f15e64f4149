#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grpdim/catalog.hpp"
#include "grpdim/cyclic_lattice.hpp"
#include "grpdim/errors.hpp"
#include "grpdim/finite_group.hpp"
#include "grpdim/order_profile.hpp"
#include "group_iso.hpp"

using namespace grpdim;

namespace {

int phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    result -= result / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::string table_text(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) out << g.mul(i, j) << ' ';
    out << '\n';
  }
  return out.str();
}

std::vector<int> powers_of(const FiniteGroup& g, int x) {
  std::vector<int> result;
  int cur = FiniteGroup::identity();
  do {
    result.push_back(cur);
    cur = g.mul(cur, x);
  } while (cur != FiniteGroup::identity());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

TEST_CASE("cyclic groups") {
  for (int k = 1; k <= 12; ++k) {
    const FiniteGroup g = build_group("Z" + std::to_string(k));
    CAPTURE(k);
    CHECK(g.order() == k);
    CHECK(g.is_abelian());
    if (k >= 2) CHECK(g.element_order(1) == k);
    std::map<int, int> by_order;
    for (int x = 0; x < k; ++x) ++by_order[g.element_order(x)];
    for (const auto& [d, count] : by_order) {
      CHECK(k % d == 0);
      CHECK(count == phi(d));
    }
  }
}

TEST_CASE("dihedral groups") {
  CHECK(build_group("D2").order() == 2);
  CHECK(build_group("D2").is_abelian());

  const FiniteGroup d8 = build_group("D8");
  CHECK(d8.order() == 8);
  CHECK_FALSE(d8.is_abelian());

  const FiniteGroup d12 = build_group("D12");
  int involutions = 0;
  std::set<int> orders;
  for (int x = 0; x < d12.order(); ++x) {
    orders.insert(d12.element_order(x));
    if (d12.element_order(x) == 2) ++involutions;
  }
  CHECK(involutions == 7);
  CHECK(orders == std::set<int>{1, 2, 3, 6});
}

TEST_CASE("symmetric groups") {
  CHECK(build_group("S1").order() == 1);
  CHECK(build_group("S2").order() == 2);

  const FiniteGroup s3 = build_group("S3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(testutil::is_isomorphic(s3, build_group("D6")));

  const FiniteGroup s4 = build_group("S4");
  CHECK(s4.order() == 24);
  std::set<int> orders4;
  for (int x = 0; x < 24; ++x) orders4.insert(s4.element_order(x));
  CHECK(orders4 == std::set<int>{1, 2, 3, 4});

  CHECK(build_group("S5").order() == 120);
  const FiniteGroup s6 = build_group("S6");
  CHECK(s6.order() == 720);
  std::set<int> orders6;
  for (int x = 0; x < 720; ++x) orders6.insert(s6.element_order(x));
  CHECK(orders6 == std::set<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("dicyclic groups have a unique involution") {
  for (int n4 = 8; n4 <= 32; n4 += 4) {
    const FiniteGroup q = build_group("Q" + std::to_string(n4));
    CAPTURE(n4);
    CHECK(q.order() == n4);
    CHECK_FALSE(q.is_abelian());
    int involutions = 0;
    int max_order = 0;
    for (int x = 0; x < n4; ++x) {
      if (q.element_order(x) == 2) ++involutions;
      max_order = std::max(max_order, q.element_order(x));
    }
    CHECK(involutions == 1);
    CHECK(max_order == n4 / 2);  // the rotation generator
  }
}

TEST_CASE("elementary abelian groups") {
  const FiniteGroup e8 = build_group("E2^3");
  CHECK(e8.order() == 8);
  CHECK(e8.is_abelian());
  for (int x = 1; x < 8; ++x) CHECK(e8.element_order(x) == 2);

  const FiniteGroup e9 = build_group("E3^2");
  CHECK(e9.order() == 9);
  for (int x = 1; x < 9; ++x) CHECK(e9.element_order(x) == 3);

  CHECK(testutil::is_isomorphic(build_group("E2^2"), build_group("Z2xZ2")));
}

TEST_CASE("direct products") {
  const FiniteGroup g = build_group("Z2xZ3");
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());
  CHECK(testutil::is_isomorphic(g, build_group("Z6")));
  CHECK(g.element_order(1 * 3 + 1) == 6);  // (1, 1)

  CHECK_FALSE(testutil::is_isomorphic(build_group("Z2xZ2"), build_group("Z4")));
  CHECK_FALSE(testutil::is_isomorphic(build_group("Q8"), build_group("D8")));
  CHECK(build_group("Z2xZ3xZ5").order() == 30);
}

TEST_CASE("descriptor errors") {
  CHECK_THROWS_AS(build_group("Z0"), InputError);
  CHECK_THROWS_AS(build_group("D7"), InputError);
  CHECK_THROWS_AS(build_group("Q6"), InputError);
  CHECK_THROWS_AS(build_group("Q4"), InputError);
  CHECK_THROWS_AS(build_group("E4^2"), InputError);
  CHECK_THROWS_AS(build_group("E2"), InputError);
  CHECK_THROWS_AS(build_group("S7"), InputError);
  CHECK_THROWS_AS(build_group("foo"), InputError);
  CHECK_THROWS_AS(build_group(""), InputError);
  CHECK_THROWS_AS(build_group("Z2x"), InputError);
  CHECK_THROWS_AS(build_group("Z3000"), CapacityError);
  CHECK_THROWS_AS(build_group("Z64xZ64"), CapacityError);
}

TEST_CASE("catalog descriptors") {
  const auto names = catalog_descriptors(32);
  CHECK_FALSE(names.empty());
  CHECK(std::is_sorted(names.begin(), names.end(), [](const auto& a, const auto& b) {
    return std::pair(descriptor_order(a), a) < std::pair(descriptor_order(b), b);
  }));
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const auto& name : names) {
    CAPTURE(name);
    const int order = descriptor_order(name);
    CHECK(order <= 32);
    CHECK(build_group(name).order() == order);
  }
  CHECK(descriptor_order("S5") == 120);
  CHECK_THROWS_AS(descriptor_order("file:/tmp/x"), InputError);

  const auto small = catalog_descriptors(6);
  CHECK(std::set<std::string>(small.begin(), small.end()) ==
        std::set<std::string>{"Z1", "Z2", "Z3", "D4", "E2^2", "Z4", "Z5", "D6", "S3", "Z6"});
}

TEST_CASE("multiplication table round trip") {
  const FiniteGroup s3 = build_group("S3");
  std::istringstream in(table_text(s3));
  const FiniteGroup back = read_cayley_table(in, "s3-copy");
  CHECK(back.order() == 6);
  CHECK(back.name() == "s3-copy");
  CHECK(testutil::is_isomorphic(back, s3));
}

TEST_CASE("identity is relabeled to index 0") {
  // Z4 with labels 0 and 2 swapped, so the identity sits at index 2.
  const FiniteGroup z4 = build_group("Z4");
  auto relabel = [](int x) { return x == 0 ? 2 : (x == 2 ? 0 : x); };
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table[i][j] = relabel(z4.mul(relabel(i), relabel(j)));
  CHECK(table[2][1] == 1);

  const FiniteGroup g = FiniteGroup::from_table(table, "shifted");
  for (int j = 0; j < 4; ++j) {
    CHECK(g.mul(0, j) == j);
    CHECK(g.mul(j, 0) == j);
  }
  std::multiset<int> orders;
  for (int x = 0; x < 4; ++x) orders.insert(g.element_order(x));
  CHECK(orders == std::multiset<int>{1, 2, 4, 4});
}

TEST_CASE("invalid tables are rejected with diagnostics") {
  // The smallest nonassociative loop: a Latin square with two-sided identity
  // that first fails associativity at the triple (1,1,2).
  const std::vector<std::vector<int>> loop5 = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}};
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table(loop5, "loop5"),
                       doctest::Contains("not associative at (1,1,2)"), InputError);

  const std::vector<std::vector<int>> repeat_row = {{0, 1, 2}, {1, 1, 2}, {2, 0, 1}};
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table(repeat_row, "bad"),
                       doctest::Contains("row 1 is not a permutation"), InputError);

  // A Latin square whose only left identity is not a right identity.
  const std::vector<std::vector<int>> no_identity = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table(no_identity, "noid"),
                       doctest::Contains("no two-sided identity"), InputError);

  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 5}}, "range"), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}, "ragged"), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({}, "empty"), InputError);

  std::istringstream truncated("3\n0 1 2\n1 2");
  CHECK_THROWS_WITH_AS(read_cayley_table(truncated, "t"), doctest::Contains("truncated"),
                       InputError);
  std::istringstream no_order("");
  CHECK_THROWS_AS(read_cayley_table(no_order, "t"), InputError);
  CHECK_THROWS_AS(read_cayley_table_file("/nonexistent/table.txt"), InputError);
}

TEST_CASE("order profile classification") {
  SUBCASE("Z1") {
    const auto p = order_profile(build_group("Z1"));
    CHECK(p.pi_e == std::vector<int>{1});
    CHECK(p.exponent == 1);
    CHECK(p.exponent_attained);
    CHECK(p.is_cyclic);
    CHECK_FALSE(p.is_p_group);
    CHECK_FALSE(p.lambda.has_value());
  }
  SUBCASE("Z6") {
    const auto p = order_profile(build_group("Z6"));
    CHECK(p.pi_e == std::vector<int>{1, 2, 3, 6});
    CHECK(p.exponent == 6);
    CHECK(p.exponent_attained);
    CHECK(p.lambda == 2);
    CHECK(p.max_big_omega == 2);
    CHECK(p.is_cyclic);
    CHECK_FALSE(p.is_cp_group);
    CHECK_FALSE(p.is_P_group);
  }
  SUBCASE("Z8") {
    const auto p = order_profile(build_group("Z8"));
    CHECK(p.is_p_group);
    CHECK(p.p == 2);
    CHECK(p.is_cp_group);
    CHECK_FALSE(p.lambda.has_value());
    CHECK(p.exponent == 8);
    CHECK(p.exponent_attained);
  }
  SUBCASE("S3") {
    const auto p = order_profile(build_group("S3"));
    CHECK(p.pi_e == std::vector<int>{1, 2, 3});
    CHECK(p.exponent == 6);
    CHECK_FALSE(p.exponent_attained);
    CHECK(p.is_cp_group);
    CHECK(p.is_P_group);
    CHECK_FALSE(p.lambda.has_value());
    CHECK(p.max_big_omega == 1);
  }
  SUBCASE("S4") {
    const auto p = order_profile(build_group("S4"));
    CHECK(p.pi_e == std::vector<int>{1, 2, 3, 4});
    CHECK(p.exponent == 12);
    CHECK_FALSE(p.exponent_attained);
    CHECK(p.is_cp_group);
    CHECK_FALSE(p.is_P_group);
    CHECK_FALSE(p.lambda.has_value());
  }
  SUBCASE("Q12") {
    const auto p = order_profile(build_group("Q12"));
    CHECK(p.pi_e == std::vector<int>{1, 2, 3, 4, 6});
    CHECK(p.exponent == 12);
    CHECK_FALSE(p.exponent_attained);
    CHECK(p.lambda == 2);
    CHECK_FALSE(p.is_generalized_quaternion);
    CHECK(p.unique_involution.has_value());
  }
  SUBCASE("D12") {
    const auto p = order_profile(build_group("D12"));
    CHECK(p.exponent == 6);
    CHECK(p.exponent_attained);
    CHECK(p.lambda == 2);
    CHECK_FALSE(p.unique_involution.has_value());
  }
  SUBCASE("involution bookkeeping") {
    CHECK(order_profile(build_group("Z2")).unique_involution == 1);
    CHECK_FALSE(order_profile(build_group("Z2xZ2")).unique_involution.has_value());
    CHECK_FALSE(order_profile(build_group("Z3")).unique_involution.has_value());
  }
}

TEST_CASE("generalized quaternion detection matches isomorphism") {
  const std::map<int, FiniteGroup> reference = {
      {8, build_group("Q8")}, {16, build_group("Q16")}, {32, build_group("Q32")}};
  for (const auto& name : catalog_descriptors(32)) {
    const FiniteGroup g = build_group(name);
    const auto p = order_profile(g);
    if (!p.is_p_group || p.p != 2) {
      CHECK_FALSE(p.is_generalized_quaternion);
      continue;
    }
    CAPTURE(name);
    const auto it = reference.find(g.order());
    const bool expected = it != reference.end() && testutil::is_isomorphic(g, it->second);
    CHECK(p.is_generalized_quaternion == expected);
    if (p.is_generalized_quaternion) CHECK(4 * (1 << p.quaternion_t) == g.order());
  }
}

TEST_CASE("element order counts are multiples of phi") {
  for (const auto& name : catalog_descriptors(24)) {
    const FiniteGroup g = build_group(name);
    std::map<int, int> by_order;
    for (int x = 0; x < g.order(); ++x) ++by_order[g.element_order(x)];
    CAPTURE(name);
    for (const auto& [d, count] : by_order) CHECK(count % phi(d) == 0);
  }
}

TEST_CASE("cyclic subgroup lattice") {
  SUBCASE("Q8") {
    const auto lat = cyclic_lattice(build_group("Q8"));
    CHECK(lat.cyclics().size() == 5);  // <e>, <z>, <i>, <j>, <k>
    CHECK(lat.maximal_ids().size() == 3);
    for (int id : lat.maximal_ids()) CHECK(lat.cyclic(id).size() == 4);
  }
  SUBCASE("Z12") {
    const auto lat = cyclic_lattice(build_group("Z12"));
    CHECK(lat.cyclics().size() == 6);  // one per divisor
    CHECK(lat.maximal_ids().size() == 1);
    CHECK(lat.cyclic(lat.maximal_ids()[0]).size() == 12);
  }
  SUBCASE("structural invariants across the catalog") {
    for (const auto& name : catalog_descriptors(24)) {
      const FiniteGroup g = build_group(name);
      const auto lat = cyclic_lattice(g);
      CAPTURE(name);

      for (int x = 0; x < g.order(); ++x) {
        CHECK(lat.generated_by(x).elements == powers_of(g, x));
        CHECK_FALSE(lat.membership(x).empty());
        CHECK(std::is_sorted(lat.membership(x).begin(), lat.membership(x).end()));
        for (int pos : lat.membership(x))
          CHECK(lat.cyclic(lat.maximal_ids()[static_cast<std::size_t>(pos)]).contains(x));
      }

      // Maximal cyclics are pairwise incomparable and cover the group.
      const auto& max_ids = lat.maximal_ids();
      std::set<int> covered;
      for (int id : max_ids) {
        const auto& m = lat.cyclic(id);
        CHECK(m.maximal);
        covered.insert(m.elements.begin(), m.elements.end());
        for (int other : max_ids) {
          if (other == id) continue;
          const auto& o = lat.cyclic(other);
          CHECK_FALSE(std::includes(o.elements.begin(), o.elements.end(), m.elements.begin(),
                                    m.elements.end()));
        }
      }
      CHECK(static_cast<int>(covered.size()) == g.order());
    }
  }
}
