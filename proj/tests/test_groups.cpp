#include "test_groups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace circord::testing {

namespace {

// Closes a set of generators under composition, with a caller-supplied product.
template <class T, class Mul>
FiniteGroup close_under(const std::string& name, const T& id, const std::vector<T>& gens, Mul mul) {
  std::vector<T> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const T& s : gens) {
      T p = mul(elems[i], s);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  const int n = static_cast<int>(elems.size());
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a][b] = static_cast<int>(std::find(elems.begin(), elems.end(), mul(elems[a], elems[b])) - elems.begin());
  return FiniteGroup::from_table(name, t);
}

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

using Mat2 = std::array<std::array<int, 4>, 4>;  // real 4x4 form of quaternions

}  // namespace

FiniteGroup symmetric3() { return close_under<Perm>("S3", {0, 1, 2}, {{1, 0, 2}, {1, 2, 0}}, compose); }

FiniteGroup dihedral4() { return close_under<Perm>("D4", {0, 1, 2, 3}, {{1, 2, 3, 0}, {3, 2, 1, 0}}, compose); }

FiniteGroup quaternion8() {
  // Left multiplication by i and j on the basis (1, i, j, k).
  Mat2 id{}, qi{}, qj{};
  for (int r = 0; r < 4; ++r) id[r][r] = 1;
  qi[1][0] = 1; qi[0][1] = -1; qi[3][2] = 1; qi[2][3] = -1;
  qj[2][0] = 1; qj[3][1] = -1; qj[0][2] = -1; qj[1][3] = 1;
  auto mul = [](const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s)
        for (int k = 0; k < 4; ++k) c[r][s] += a[r][k] * b[k][s];
    return c;
  };
  return close_under<Mat2>("Q8", id, {qi, qj}, mul);
}

FiniteGroup elementary(int k, int r) {
  using V = std::vector<int>;
  std::vector<V> gens;
  for (int i = 0; i < r; ++i) {
    V e(r, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  auto add = [k](const V& a, const V& b) {
    V c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % k;
    return c;
  };
  return close_under<V>("Z" + std::to_string(k) + "^" + std::to_string(r), V(r, 0), gens, add);
}

FiniteGroup zk_times_zn(int k, int n) {
  using V = std::pair<int, int>;
  auto add = [k, n](const V& a, const V& b) { return V{(a.first + b.first) % k, (a.second + b.second) % n}; };
  return close_under<V>("Z" + std::to_string(k) + "xZ" + std::to_string(n), {0, 0}, {{1 % k, 0}, {0, 1 % n}}, add);
}

std::vector<FiniteGroup> small_group_library() {
  std::vector<FiniteGroup> out;
  for (int k = 1; k <= 8; ++k) out.push_back(zk_times_zn(k, 1));
  out.push_back(elementary(2, 2));
  out.push_back(symmetric3());
  out.push_back(zk_times_zn(4, 2));
  out.push_back(elementary(2, 3));
  out.push_back(dihedral4());
  out.push_back(quaternion8());
  return out;
}

long long gcd_ll(long long a, long long b) { return b == 0 ? (a < 0 ? -a : a) : gcd_ll(b, a % b); }

long long euler_phi(long long n) {
  long long c = 0;
  for (long long i = 1; i <= n; ++i)
    if (gcd_ll(i, n) == 1) ++c;
  return c;
}

int orientation(const std::vector<Element>& arrangement, Element x, Element y, Element z) {
  if (x == y || y == z || x == z) return 0;
  std::map<Element, int> pos;
  for (std::size_t i = 0; i < arrangement.size(); ++i) pos[arrangement[i]] = static_cast<int>(i);
  const int n = static_cast<int>(arrangement.size());
  const int dy = (pos[y] - pos[x] + n) % n, dz = (pos[z] - pos[x] + n) % n;
  return dy < dz ? 1 : -1;
}

std::vector<std::vector<Element>> brute_force_arrangements(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<Element>> out;
  if (n == 1) return {{0}};
  std::vector<Element> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    std::vector<Element> arr{0};
    arr.insert(arr.end(), rest.begin(), rest.end());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[arr[i]] = i;
    // Left multiplication by h must preserve orientation; equivalently it
    // maps the arrangement to a rotation of itself.
    bool ok = true;
    for (int h = 1; h < n && ok; ++h) {
      const int shift = (pos[g.mul(h, arr[0])] - 0 + n) % n;
      for (int i = 0; i < n && ok; ++i) ok = pos[g.mul(h, arr[i])] == (i + shift) % n;
    }
    if (ok) out.push_back(arr);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace circord::testing
