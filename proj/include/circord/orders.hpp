// Circular orderings on groups in three interchangeable encodings:
//
//   InhomCircularOrder  f : G x G -> {0, 1}, a normalized 2-cocycle with
//                       f(g, g^-1) = 1 for g != id ("carry bit" form);
//   HomCircularOrder    c : G^3 -> {0, +1, -1}, left-invariant, vanishing
//                       exactly on degenerate triples, a homogeneous cocycle;
//   Arrangement         the elements listed counterclockwise starting at id.
//
// Validated types can only be obtained through their validate functions, so a
// value of either ordering type always satisfies every axiom.

#ifndef CIRCORD_ORDERS_HPP_
#define CIRCORD_ORDERS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circord/cochain.hpp"
#include "circord/errors.hpp"
#include "circord/group.hpp"

namespace circord {

struct Violation {
  enum class Kind { Shape, Range, Normalization, InversePair, Cocycle, Vanishing, Invariance };
  Kind kind;
  // Smallest failing tuple in lexicographic order (empty for Shape).
  std::vector<Element> witness;
  std::string detail;

  std::string describe() const;
};

const char* to_string(Violation::Kind kind);

class OrderViolation : public InvalidInput {
 public:
  explicit OrderViolation(Violation v) : InvalidInput(v.describe()), violation_(std::move(v)) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

// Dense n x n x n table of values in {-1, 0, 1}.
class TripleTable {
 public:
  TripleTable() = default;
  explicit TripleTable(int order)
      : n_(order), v_(static_cast<std::size_t>(order) * order * order, 0) {}
  int order() const { return n_; }
  int operator()(Element a, Element b, Element c) const { return v_[idx(a, b, c)]; }
  signed char& operator()(Element a, Element b, Element c) { return v_[idx(a, b, c)]; }
  friend bool operator==(const TripleTable&, const TripleTable&) = default;

 private:
  std::size_t idx(Element a, Element b, Element c) const {
    const auto n = static_cast<std::size_t>(n_);
    return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c);
  }
  int n_ = 0;
  std::vector<signed char> v_;
};

class InhomCircularOrder {
 public:
  // Throws OrderViolation naming the failed axiom and a witness.
  static InhomCircularOrder validate(FiniteGroup group, Cochain2 values);

  const FiniteGroup& group() const { return group_; }
  int operator()(Element g, Element h) const { return static_cast<int>(values_(g, h)); }
  const Cochain2& cochain() const { return values_; }
  friend bool operator==(const InhomCircularOrder& a, const InhomCircularOrder& b) {
    return a.group_.same_table(b.group_) && a.values_ == b.values_;
  }

 private:
  InhomCircularOrder(FiniteGroup g, Cochain2 v) : group_(std::move(g)), values_(std::move(v)) {}
  FiniteGroup group_;
  Cochain2 values_;
};

class HomCircularOrder {
 public:
  static HomCircularOrder validate(FiniteGroup group, TripleTable values);

  const FiniteGroup& group() const { return group_; }
  int operator()(Element a, Element b, Element c) const { return values_(a, b, c); }
  const TripleTable& values() const { return values_; }
  friend bool operator==(const HomCircularOrder& a, const HomCircularOrder& b) {
    return a.group_.same_table(b.group_) && a.values_ == b.values_;
  }

 private:
  HomCircularOrder(FiniteGroup g, TripleTable v) : group_(std::move(g)), values_(std::move(v)) {}
  FiniteGroup group_;
  TripleTable values_;
};

using Arrangement = std::vector<Element>;

std::optional<Violation> check_inhom(const FiniteGroup& g, const Cochain2& values);
std::optional<Violation> check_hom(const FiniteGroup& g, const TripleTable& values);
std::optional<Violation> check_arrangement(const FiniteGroup& g, const Arrangement& a);

inline InhomCircularOrder validate_inhom(const FiniteGroup& g, Cochain2 values) {
  return InhomCircularOrder::validate(g, std::move(values));
}
inline HomCircularOrder validate_hom(const FiniteGroup& g, TripleTable values) {
  return HomCircularOrder::validate(g, std::move(values));
}

// f^(c)(g, h) = 0 if g or h is id; 1 if gh = id; (1 - c(id, g, gh)) / 2 otherwise.
InhomCircularOrder hom_to_inhom(const HomCircularOrder& c);
// c^(f)(g1, g2, g3) = 0 on coincidences, else 1 - 2 f(g1^-1 g2, g2^-1 g3).
HomCircularOrder inhom_to_hom(const InhomCircularOrder& f);

// Raw cyclic-order values of an arrangement (no invariance check).
TripleTable arrangement_values(const FiniteGroup& g, const Arrangement& a);
// Throws OrderViolation (Shape or Invariance) if a does not define an ordering.
HomCircularOrder arrangement_to_hom(const FiniteGroup& g, const Arrangement& a);
Arrangement hom_to_arrangement(const HomCircularOrder& c);
// For unvalidated values: reports invariance (or other) failures by throwing.
Arrangement hom_to_arrangement(const FiniteGroup& g, const TripleTable& values);

InhomCircularOrder arrangement_to_inhom(const FiniteGroup& g, const Arrangement& a);
Arrangement inhom_to_arrangement(const InhomCircularOrder& f);

inline constexpr int kDefaultEnumerationBound = 12;

// All arrangements defining a circular ordering, in lexicographic order.
std::vector<Arrangement> enumerate_circular_orders(const FiniteGroup& g,
                                                   int order_bound = kDefaultEnumerationBound);

// f_s(a, b) = 1 iff a + b >= n for representatives 0 <= a, b < n.
InhomCircularOrder standard_order_zn(int n);

// ---------------------------------------------------------------------------
// Left orders and the lexicographic construction, for groups with any exact
// element type. `Ops` supplies mul(a, b), inv(a) and identity().

template <typename T>
struct LeftOrderOracle {
  std::function<bool(const T&)> is_positive;
};

// Homogeneous circular ordering induced by a left order: +1 when the triple is
// a cyclic rotation of an increasing one, -1 for the other orientation.
template <typename Ops, typename T>
int linear_triple_order(const Ops& ops, const LeftOrderOracle<T>& order, const T& k1, const T& k2,
                        const T& k3) {
  if (k1 == k2 || k2 == k3 || k1 == k3) return 0;
  auto less = [&](const T& x, const T& y) { return order.is_positive(ops.mul(ops.inv(x), y)); };
  const bool a = less(k1, k2), b = less(k2, k3), c = less(k3, k1);
  // Exactly one of the three pairs is out of order in a cyclically increasing
  // triple; exactly two are in the decreasing case.
  return (static_cast<int>(a) + static_cast<int>(b) + static_cast<int>(c)) == 2 ? 1 : -1;
}

template <typename Ops, typename Q>
class LexicographicCircularOrder {
 public:
  using T = decltype(std::declval<const Ops&>().identity());

  LexicographicCircularOrder(Ops ops, LeftOrderOracle<T> kernel_order,
                             std::function<int(const Q&, const Q&, const Q&)> quotient_order,
                             std::function<Q(const T&)> projection)
      : ops_(std::move(ops)),
        kernel_(std::move(kernel_order)),
        quotient_(std::move(quotient_order)),
        phi_(std::move(projection)) {}

  int operator()(const T& g1, const T& g2, const T& g3) const {
    if (g1 == g2 || g2 == g3 || g1 == g3) return 0;
    const Q p1 = phi_(g1), p2 = phi_(g2), p3 = phi_(g3);
    if (p1 != p2 && p2 != p3 && p1 != p3) return quotient_(p1, p2, p3);
    if (p1 == p2 && p2 == p3) return fiber(g1, g2, g3);
    // Exactly two images agree; rotate cyclically (sign-preserving) so that the
    // agreeing pair comes first.
    if (p1 == p2) return pair(g1, g2);
    if (p2 == p3) return pair(g2, g3);
    return pair(g3, g1);
  }

  const Ops& ops() const { return ops_; }

 private:
  // phi(g1) = phi(g2) != phi(g3): c_<(g2^-1 g1, id, g1^-1 g2)
  int pair(const T& g1, const T& g2) const {
    return linear_triple_order(ops_, kernel_, ops_.mul(ops_.inv(g2), g1), ops_.identity(),
                               ops_.mul(ops_.inv(g1), g2));
  }
  // all images equal: c_<(g1^-1 g3, id, g1^-1 g2)
  int fiber(const T& g1, const T& g2, const T& g3) const {
    return linear_triple_order(ops_, kernel_, ops_.mul(ops_.inv(g1), g3), ops_.identity(),
                               ops_.mul(ops_.inv(g1), g2));
  }

  Ops ops_;
  LeftOrderOracle<T> kernel_;
  std::function<int(const Q&, const Q&, const Q&)> quotient_;
  std::function<Q(const T&)> phi_;
};

// Finite carrier: materializes and validates the lexicographic ordering built
// from a left order on ker(phi) and a circular ordering on the image. Throws
// InvalidInput if phi is not a homomorphism onto quotient_order's group.
HomCircularOrder lexicographic_circular_order(const FiniteGroup& g, const LeftOrderOracle<Element>& kernel_order,
                                              const HomCircularOrder& quotient_order, const GroupHom& phi);

}  // namespace circord

#endif  // CIRCORD_ORDERS_HPP_
