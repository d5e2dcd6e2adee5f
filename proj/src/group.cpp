#include "circord/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace circord {

namespace {

// Largest order whose flat table index g * n + h still fits in an int.
constexpr int kMaxOrder = 46340;

std::string describe(const char* what, int a, int b) {
  std::ostringstream os;
  os << what << " at (" << a << ", " << b << ")";
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->name = "trivial";
  d->n = 1;
  d->table = {0};
  d->inverse = {0};
  d->names = {"e"};
  d_ = std::move(d);
}

FiniteGroup FiniteGroup::from_table(std::string name, const Table& table,
                                    std::vector<std::string> names) {
  using K = GroupError::Kind;
  const auto n = static_cast<int>(table.size());
  if (n == 0) throw GroupError(K::InvalidTable, "group table is empty");
  if (n > kMaxOrder) throw GroupError(K::Overflow, "group order too large for table indexing");
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(table[g].size()) != n)
      throw GroupError(K::InvalidTable, "table row " + std::to_string(g) + " has wrong length");
    for (int h = 0; h < n; ++h)
      if (table[g][h] < 0 || table[g][h] >= n)
        throw GroupError(K::InvalidTable, describe("table entry out of range", g, h));
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw GroupError(K::InvalidTable, "names list length does not match order");

  // Locate the identity: the row that is the identity permutation.
  int e = -1;
  for (int g = 0; g < n && e < 0; ++g) {
    bool ok = true;
    for (int h = 0; h < n && ok; ++h) ok = table[g][h] == h && table[h][g] == h;
    if (ok) e = g;
  }
  if (e < 0) throw GroupError(K::InvalidTable, "table has no two-sided identity");

  // Relabel by the transposition (0 e).
  std::vector<int> relabel(static_cast<std::size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[static_cast<std::size_t>(e)]);

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->n = n;
  d->table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      d->table[static_cast<std::size_t>(relabel[g] * n + relabel[h])] = relabel[table[g][h]];
  d->names.resize(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g)
    d->names[static_cast<std::size_t>(relabel[g])] = names.empty() ? std::to_string(g) : names[g];

  auto at = [&](int g, int h) { return d->table[static_cast<std::size_t>(g * n + h)]; };

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < n; ++h) {
      if (seen[at(g, h)]) throw GroupError(K::InvalidTable, "row " + std::to_string(g) + " is not a permutation");
      seen[at(g, h)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < n; ++h) {
      if (seen[at(h, g)]) throw GroupError(K::InvalidTable, "column " + std::to_string(g) + " is not a permutation");
      seen[at(h, g)] = 1;
    }
  }

  d->inverse.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (at(g, h) == 0) d->inverse[static_cast<std::size_t>(g)] = h;

  FiniteGroup out{std::shared_ptr<const Data>(d)};

  // Light's associativity test: the elements a with (x a) y = x (a y) for all
  // x, y are closed under products, so checking a generating set suffices.
  // Generation only uses the (already valid) Latin-square structure.
  for (Element a : generating_set(out))
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (at(at(x, a), y) != at(x, at(a, y)))
          throw GroupError(K::InvalidTable, "associativity fails for (" + std::to_string(x) + ", " +
                                                std::to_string(a) + ", " + std::to_string(y) + ")");
  return out;
}

Element FiniteGroup::pow(Element g, long long t) const {
  if (t < 0) {
    g = inv(g);
    t = -t;
  }
  Element r = 0, b = g;
  while (t > 0) {
    if (t & 1) r = mul(r, b);
    b = mul(b, b);
    t >>= 1;
  }
  return r;
}

void FiniteGroup::check_element(Element g) const {
  if (!contains(g))
    throw GroupError(GroupError::Kind::InvalidElement,
                     "element index " + std::to_string(g) + " out of range for group of order " +
                         std::to_string(order()));
}

Table FiniteGroup::table() const {
  const int n = order();
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) t[g][h] = mul(g, h);
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order(); ++g)
    for (int h = g + 1; h < order(); ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return d_ == other.d_ || (order() == other.order() && d_->table == other.d_->table);
}

GroupHom GroupHom::make(FiniteGroup source, FiniteGroup target, std::vector<Element> map) {
  GroupHom h{std::move(source), std::move(target), std::move(map)};
  if (static_cast<int>(h.map.size()) != h.source.order())
    throw GroupError(GroupError::Kind::InvalidArgument, "homomorphism map has wrong length");
  for (Element x : h.map) h.target.check_element(x);
  if (!h.is_homomorphism())
    throw GroupError(GroupError::Kind::InvalidArgument, "map is not a homomorphism");
  return h;
}

bool GroupHom::is_homomorphism() const {
  if (map.empty() || map[0] != 0) return false;
  for (int g = 0; g < source.order(); ++g)
    for (int h = 0; h < source.order(); ++h)
      if (map[source.mul(g, h)] != target.mul(map[g], map[h])) return false;
  return true;
}

bool GroupHom::is_injective() const {
  std::set<Element> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == source.order();
}

bool GroupHom::is_surjective() const {
  std::set<Element> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == target.order();
}

std::vector<Element> GroupHom::kernel() const {
  std::vector<Element> k;
  for (int g = 0; g < source.order(); ++g)
    if (map[g] == 0) k.push_back(g);
  return k;
}

FiniteGroup cyclic_group(int k) {
  if (k < 1) throw GroupError(GroupError::Kind::InvalidArgument, "cyclic group order must be positive");
  if (k > kMaxOrder) throw GroupError(GroupError::Kind::Overflow, "cyclic group order too large");
  Table t(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  std::vector<std::string> names(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < k; ++j) t[i][j] = (i + j) % k;
  }
  return FiniteGroup::from_table(k == 1 ? "trivial" : "Z/" + std::to_string(k), t, std::move(names));
}

ProductGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const long long ng = g.order(), nh = h.order();
  if (ng * nh > kMaxOrder)
    throw GroupError(GroupError::Kind::Overflow, "direct product order " + std::to_string(ng * nh) +
                                                     " overflows table indexing");
  const int n = static_cast<int>(ng * nh);
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) {
      const int x = a * static_cast<int>(nh) + b;
      names[x] = "(" + g.element_name(a) + "," + h.element_name(b) + ")";
      for (int c = 0; c < ng; ++c)
        for (int d = 0; d < nh; ++d)
          t[x][c * nh + d] = g.mul(a, c) * static_cast<int>(nh) + h.mul(b, d);
    }
  std::string name = g.order() == 1 ? h.name() : h.order() == 1 ? g.name() : g.name() + " x " + h.name();
  FiniteGroup p = FiniteGroup::from_table(std::move(name), t, std::move(names));

  std::vector<Element> p1(n), p2(n), i1(ng), i2(nh);
  for (int x = 0; x < n; ++x) {
    p1[x] = x / static_cast<int>(nh);
    p2[x] = x % static_cast<int>(nh);
  }
  for (int a = 0; a < ng; ++a) i1[a] = a * static_cast<int>(nh);
  for (int b = 0; b < nh; ++b) i2[b] = b;
  return ProductGroup{p, GroupHom::make(p, g, std::move(p1)), GroupHom::make(p, h, std::move(p2)),
                      GroupHom::make(g, p, std::move(i1)), GroupHom::make(h, p, std::move(i2))};
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> s) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Element x : s) {
    if (!g.contains(x)) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (Element x : s) {
    if (!in[g.inv(x)]) return false;
    for (Element y : s)
      if (!in[g.mul(x, y)]) return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const Element> s) {
  if (!is_subgroup(g, s)) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Element x : s) in[x] = 1;
  for (int a = 0; a < g.order(); ++a)
    for (Element x : s)
      if (!in[g.mul(g.mul(a, x), g.inv(a))]) return false;
  return true;
}

bool is_central_subset(const FiniteGroup& g, std::span<const Element> s) {
  for (Element x : s)
    for (int a = 0; a < g.order(); ++a)
      if (g.mul(a, x) != g.mul(x, a)) return false;
  return true;
}

std::vector<Element> center(const FiniteGroup& g) {
  std::vector<Element> z;
  for (int x = 0; x < g.order(); ++x) {
    const Element one[] = {x};
    if (is_central_subset(g, one)) z.push_back(x);
  }
  return z;
}

QuotientGroup quotient(const FiniteGroup& g, std::span<const Element> normal_subgroup) {
  for (Element x : normal_subgroup) g.check_element(x);
  if (!is_subgroup(g, normal_subgroup))
    throw GroupError(GroupError::Kind::NotSubgroup, "quotient: element set is not a subgroup");
  if (!is_normal_subgroup(g, normal_subgroup))
    throw GroupError(GroupError::Kind::NotNormal, "quotient: subgroup is not normal");

  const int n = g.order();
  std::vector<int> coset(static_cast<std::size_t>(n), -1);
  std::vector<Element> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Element k : normal_subgroup) coset[g.mul(x, k)] = id;
  }
  const int m = static_cast<int>(reps.size());
  Table t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<std::string> names(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    names[i] = "[" + g.element_name(reps[i]) + "]";
    for (int j = 0; j < m; ++j) t[i][j] = coset[g.mul(reps[i], reps[j])];
  }
  FiniteGroup q = FiniteGroup::from_table(g.name() + " / N", t, std::move(names));
  return QuotientGroup{q, GroupHom::make(g, q, std::move(coset)), std::move(reps)};
}

std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<Element> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Element s : gens) {
      g.check_element(s);
      const Element y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  in[0] = 1;
  for (int x = 1; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    for (Element y : closure(g, gens)) in[y] = 1;
  }
  return gens;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> generators) {
  const std::vector<Element> elems = closure(g, generators);
  const int m = static_cast<int>(elems.size());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) index[elems[i]] = i;
  Table t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<std::string> names(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    names[i] = g.element_name(elems[i]);
    for (int j = 0; j < m; ++j) t[i][j] = index[g.mul(elems[i], elems[j])];
  }
  FiniteGroup s = FiniteGroup::from_table("<" + g.name() + " subgroup>", t, std::move(names));
  return Subgroup{s, GroupHom::make(s, g, elems)};
}

int element_order(const FiniteGroup& g, Element x) {
  g.check_element(x);
  int t = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++t;
  return t;
}

int exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.order(); ++x) e = std::lcm(e, static_cast<long long>(element_order(g, x)));
  return static_cast<int>(e);
}

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

std::vector<std::vector<Element>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> seen;
  std::deque<std::vector<Element>> queue;
  std::vector<std::vector<Element>> out;
  const std::vector<Element> triv{0};
  seen.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    std::vector<Element> s = std::move(queue.front());
    queue.pop_front();
    for (int x = 1; x < g.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::vector<Element> gens = s;
      gens.push_back(x);
      std::vector<Element> bigger = closure(g, gens);
      if (seen.insert(bigger).second) queue.push_back(std::move(bigger));
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& g, const FiniteGroup& h) : g_(g), h_(h), gens_(generating_set(g)) {
    for (int x = 0; x < h.order(); ++x) h_orders_.push_back(element_order(h, x));
  }

  std::optional<std::vector<Element>> run() {
    images_.clear();
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t level) {
    if (!extend(level)) return false;
    if (level == gens_.size()) return true;
    const int want = element_order(g_, gens_[level]);
    for (int y = 0; y < h_.order(); ++y) {
      if (h_orders_[y] != want) continue;
      images_.push_back(y);
      if (search(level + 1)) return true;
      images_.pop_back();
    }
    return false;
  }

  // Propagates the partial assignment over the subgroup generated by the first
  // `level` generators. Fails on inconsistency or non-injectivity.
  bool extend(std::size_t level) {
    map_.assign(static_cast<std::size_t>(g_.order()), -1);
    std::vector<char> used(static_cast<std::size_t>(h_.order()), 0);
    map_[0] = 0;
    used[0] = 1;
    std::vector<Element> frontier{0};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const Element x = frontier[i];
      for (std::size_t s = 0; s < level; ++s) {
        const Element y = g_.mul(x, gens_[s]);
        const Element img = h_.mul(map_[x], images_[s]);
        if (map_[y] < 0) {
          if (used[img]) return false;
          used[img] = 1;
          map_[y] = img;
          frontier.push_back(y);
        } else if (map_[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<Element> gens_;
  std::vector<int> h_orders_;
  std::vector<Element> images_;
  std::vector<Element> map_;
};

}  // namespace

std::optional<GroupHom> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h, int order_bound) {
  if (g.order() > order_bound || h.order() > order_bound)
    throw BoundExceeded("find_isomorphism: order exceeds bound " + std::to_string(order_bound));
  if (g.order() != h.order()) return std::nullopt;
  auto map = IsoSearch(g, h).run();
  if (!map) return std::nullopt;
  return GroupHom::make(g, h, std::move(*map));
}

}  // namespace circord
