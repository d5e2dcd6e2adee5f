// Small groups and brute-force oracles shared by the tests. Everything here is
// built without going through the library's search or cohomology code.

#ifndef CIRCORD_TESTS_TEST_GROUPS_HPP_
#define CIRCORD_TESTS_TEST_GROUPS_HPP_

#include <string>
#include <vector>

#include "circord/group.hpp"

namespace circord::testing {

// Groups from permutation or matrix generators, closed by brute force.
FiniteGroup symmetric3();
FiniteGroup dihedral4();
FiniteGroup quaternion8();
// (Z/k)^r, built directly from coordinates mod k.
FiniteGroup elementary(int k, int r);
FiniteGroup zk_times_zn(int k, int n);

// One representative of each isomorphism class of order <= 8.
std::vector<FiniteGroup> small_group_library();

long long euler_phi(long long n);
long long gcd_ll(long long a, long long b);

// Every cyclic arrangement (identity first) that is left-invariant, found by
// trying all (n-1)! orderings of the non-identity elements.
std::vector<std::vector<Element>> brute_force_arrangements(const FiniteGroup& g);

// Orientation of (x, y, z) in a cyclic arrangement: 1, -1 or 0 if degenerate.
int orientation(const std::vector<Element>& arrangement, Element x, Element y, Element z);

}  // namespace circord::testing

#endif  // CIRCORD_TESTS_TEST_GROUPS_HPP_
