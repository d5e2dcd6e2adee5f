#include "circord/orders.hpp"

#include <algorithm>
#include <sstream>

namespace circord {

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Shape: return "shape";
    case Violation::Kind::Range: return "range";
    case Violation::Kind::Normalization: return "normalization";
    case Violation::Kind::InversePair: return "inverse-pair";
    case Violation::Kind::Cocycle: return "cocycle";
    case Violation::Kind::Vanishing: return "vanishing-set";
    case Violation::Kind::Invariance: return "invariance";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " failure";
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i];
    os << ")";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

std::optional<Violation> check_inhom(const FiniteGroup& g, const Cochain2& f) {
  using K = Violation::Kind;
  const int n = g.order();
  if (f.order() != n) return Violation{K::Shape, {}, "expected " + std::to_string(n) + "x" + std::to_string(n) + " values"};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f(a, b) != 0 && f(a, b) != 1) return Violation{K::Range, {a, b}, "value must be 0 or 1"};
  if (auto w = normalization_failure(g, f)) return Violation{K::Normalization, {(*w)[0], (*w)[1]}, ""};
  for (int a = 1; a < n; ++a)
    if (f(a, g.inv(a)) != 1) return Violation{K::InversePair, {a}, "f(g, g^-1) must be 1"};
  if (auto w = cocycle_failure(g, f)) return Violation{K::Cocycle, {(*w)[0], (*w)[1], (*w)[2]}, ""};
  return std::nullopt;
}

std::optional<Violation> check_hom(const FiniteGroup& g, const TripleTable& c) {
  using K = Violation::Kind;
  const int n = g.order();
  if (c.order() != n) return Violation{K::Shape, {}, "expected an order^3 table"};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const int v = c(a, b, d);
        if (v < -1 || v > 1) return Violation{K::Range, {a, b, d}, "value must be 0 or +-1"};
        const bool degenerate = a == b || b == d || a == d;
        if ((v == 0) != degenerate) return Violation{K::Vanishing, {a, b, d}, ""};
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e)
          if (c(b, d, e) - c(a, d, e) + c(a, b, e) - c(a, b, d) != 0)
            return Violation{K::Cocycle, {a, b, d, e}, ""};
  for (int h = 1; h < n; ++h)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d)
          if (c(g.mul(h, a), g.mul(h, b), g.mul(h, d)) != c(a, b, d))
            return Violation{K::Invariance, {h, a, b, d}, ""};
  return std::nullopt;
}

std::optional<Violation> check_arrangement(const FiniteGroup& g, const Arrangement& a) {
  const int n = g.order();
  if (static_cast<int>(a.size()) != n)
    return Violation{Violation::Kind::Shape, {}, "arrangement must list every element once"};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Element x : a) {
    if (!g.contains(x) || seen[x]) return Violation{Violation::Kind::Shape, {}, "arrangement is not a permutation"};
    seen[x] = 1;
  }
  if (a[0] != 0) return Violation{Violation::Kind::Shape, {}, "arrangement must start at the identity"};
  return std::nullopt;
}

InhomCircularOrder InhomCircularOrder::validate(FiniteGroup group, Cochain2 values) {
  if (auto v = check_inhom(group, values)) throw OrderViolation(*v);
  return InhomCircularOrder(std::move(group), std::move(values));
}

HomCircularOrder HomCircularOrder::validate(FiniteGroup group, TripleTable values) {
  if (auto v = check_hom(group, values)) throw OrderViolation(*v);
  return HomCircularOrder(std::move(group), std::move(values));
}

InhomCircularOrder hom_to_inhom(const HomCircularOrder& c) {
  const FiniteGroup& g = c.group();
  const int n = g.order();
  Cochain2 f(n);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      const Element ab = g.mul(a, b);
      f(a, b) = ab == 0 ? 1 : (1 - c(0, a, ab)) / 2;
    }
  return validate_inhom(g, std::move(f));
}

HomCircularOrder inhom_to_hom(const InhomCircularOrder& f) {
  const FiniteGroup& g = f.group();
  const int n = g.order();
  TripleTable c(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        if (a == b || b == d || a == d) continue;
        c(a, b, d) = static_cast<signed char>(1 - 2 * f(g.ldiv(a, b), g.ldiv(b, d)));
      }
  return validate_hom(g, std::move(c));
}

TripleTable arrangement_values(const FiniteGroup& g, const Arrangement& a) {
  if (auto v = check_arrangement(g, a)) throw OrderViolation(*v);
  const int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[a[i]] = i;
  TripleTable c(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        const int dy = (pos[y] - pos[x] + n) % n, dz = (pos[z] - pos[x] + n) % n;
        c(x, y, z) = dy < dz ? 1 : -1;
      }
  return c;
}

HomCircularOrder arrangement_to_hom(const FiniteGroup& g, const Arrangement& a) {
  return validate_hom(g, arrangement_values(g, a));
}

Arrangement hom_to_arrangement(const HomCircularOrder& c) {
  Arrangement a;
  for (int x = 1; x < c.group().order(); ++x) a.push_back(x);
  std::sort(a.begin(), a.end(), [&](Element x, Element y) { return c(0, x, y) == 1; });
  a.insert(a.begin(), 0);
  return a;
}

Arrangement hom_to_arrangement(const FiniteGroup& g, const TripleTable& values) {
  return hom_to_arrangement(validate_hom(g, values));
}

InhomCircularOrder arrangement_to_inhom(const FiniteGroup& g, const Arrangement& a) {
  return hom_to_inhom(arrangement_to_hom(g, a));
}

Arrangement inhom_to_arrangement(const InhomCircularOrder& f) { return hom_to_arrangement(inhom_to_hom(f)); }

namespace {

// Depth-first search over arrangements anchored at the identity. Left
// multiplication by an element s of a left-invariant arrangement is the
// rotation by pos(s), so s * a[i] must sit at position pos(s) + i (mod n).
// Partial arrangements violating this for a generator are pruned.
class ArrangementSearch {
 public:
  explicit ArrangementSearch(const FiniteGroup& g)
      : g_(g), n_(g.order()), gens_(generating_set(g)), pos_(static_cast<std::size_t>(n_), -1) {}

  std::vector<Arrangement> run() {
    arr_.assign(1, 0);
    pos_[0] = 0;
    dfs();
    return std::move(found_);
  }

 private:
  void dfs() {
    const int len = static_cast<int>(arr_.size());
    if (len == n_) {
      if (!check_arrangement(g_, arr_) && !check_hom(g_, arrangement_values(g_, arr_))) found_.push_back(arr_);
      return;
    }
    for (int x = 1; x < n_; ++x) {
      if (pos_[x] >= 0) continue;
      arr_.push_back(x);
      pos_[x] = len;
      if (consistent()) dfs();
      pos_[x] = -1;
      arr_.pop_back();
    }
  }

  bool consistent() const {
    const int len = static_cast<int>(arr_.size());
    for (Element s : gens_) {
      const int shift = pos_[s];
      if (shift < 0) continue;
      for (int i = 0; i < len; ++i) {
        const Element image = g_.mul(s, arr_[i]);
        const int target = (shift + i) % n_;
        const int at = pos_[image];
        if (at >= 0 && at != target) return false;
        if (at < 0 && target < len) return false;
      }
    }
    return true;
  }

  const FiniteGroup& g_;
  int n_;
  std::vector<Element> gens_;
  std::vector<int> pos_;
  Arrangement arr_;
  std::vector<Arrangement> found_;
};

}  // namespace

std::vector<Arrangement> enumerate_circular_orders(const FiniteGroup& g, int order_bound) {
  if (g.order() > order_bound)
    throw BoundExceeded("enumerate_circular_orders: order " + std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(order_bound));
  return ArrangementSearch(g).run();
}

InhomCircularOrder standard_order_zn(int n) {
  FiniteGroup z = cyclic_group(n);
  Cochain2 f(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f(a, b) = a + b >= n ? 1 : 0;
  return validate_inhom(z, std::move(f));
}

HomCircularOrder lexicographic_circular_order(const FiniteGroup& g, const LeftOrderOracle<Element>& kernel_order,
                                              const HomCircularOrder& quotient_order, const GroupHom& phi) {
  if (!phi.source.same_table(g) || !phi.target.same_table(quotient_order.group()))
    throw InvalidInput("lexicographic order: projection has wrong source or target");
  if (!phi.is_homomorphism() || !phi.is_surjective())
    throw InvalidInput("lexicographic order: projection is not a surjective homomorphism");
  LexicographicCircularOrder<FiniteGroup, Element> lex(
      g, kernel_order, [&](Element a, Element b, Element c) { return quotient_order(a, b, c); },
      [&](Element x) { return phi(x); });
  const int n = g.order();
  TripleTable c(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) c(a, b, d) = static_cast<signed char>(lex(a, b, d));
  return validate_hom(g, std::move(c));
}

}  // namespace circord
