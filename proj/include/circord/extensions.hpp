// Central extensions A x_f G with law (a, g)(b, h) = (a + b + f(g, h), gh),
// A = Z or Z/n, and the constructions built from them: the left order on the
// Z-extension of a circularly ordered group, quotients by cofinal central
// elements, the finite extensions with their explicit ordering, and minimal
// generators.

#ifndef CIRCORD_EXTENSIONS_HPP_
#define CIRCORD_EXTENSIONS_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "circord/cochain.hpp"
#include "circord/group.hpp"
#include "circord/integer.hpp"
#include "circord/orders.hpp"

namespace circord {

struct ExtElement {
  Integer a;
  Element g = 0;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

inline constexpr int kMaterializeLimit = 1024;

class CentralExtension {
 public:
  // Throws InvalidInput if f is not a normalized 2-cocycle on base.
  static CentralExtension build(FiniteGroup base, Cochain2 f, Coefficients coefficients);

  const FiniteGroup& base() const { return base_; }
  const Cochain2& cocycle() const { return f_; }
  Coefficients coefficients() const { return coeff_; }
  // True when f is a circular ordering, so that the cone order applies.
  bool is_ordering() const { return is_ordering_; }

  ExtElement identity() const { return {Integer(0), 0}; }
  ExtElement make(const Integer& a, Element g) const;
  ExtElement mul(const ExtElement& x, const ExtElement& y) const;
  ExtElement inv(const ExtElement& x) const;
  ExtElement pow(const ExtElement& x, long long t) const;
  ExtElement iota(const Integer& a) const { return make(a, 0); }
  Element rho(const ExtElement& x) const { return x.g; }

  std::string format(const ExtElement& x) const;

  // Z/n coefficients with n |G| <= kMaterializeLimit only. Element (a, g) has
  // index a |G| + g, so the identity is index 0.
  bool is_materialized() const { return materialized_.has_value(); }
  const FiniteGroup& materialized() const;
  Element index_of(const ExtElement& x) const;
  ExtElement element_at(Element index) const;

 private:
  CentralExtension(FiniteGroup base, Cochain2 f, Coefficients c, bool ordering);
  Integer reduce(Integer a) const;

  FiniteGroup base_;
  Cochain2 f_;
  Coefficients coeff_;
  bool is_ordering_ = false;
  std::optional<FiniteGroup> materialized_;
};

// The cone P = {(a, g) : a >= 0} \ {id}. Both require an integral extension
// built from a circular ordering (InvalidInput otherwise).
bool is_positive(const CentralExtension& e, const ExtElement& x);
// x < y iff x^-1 y is in P.
std::strong_ordering cone_compare(const CentralExtension& e, const ExtElement& x, const ExtElement& y);

// z^-t < g < z^t.
bool witnesses_cofinality(const CentralExtension& e, const ExtElement& z, const ExtElement& g, long long t);

struct CofinalityReport {
  bool positive = false;
  bool central = false;
  // Base element x with z (0, x) != (0, x) z, when not central.
  std::optional<Element> noncommuting;
  // Probe without any witness t (only possible when z is not central/positive).
  std::optional<ExtElement> failed_probe;
  // Largest least witness t over all probes.
  long long max_witness = 0;

  bool cofinal_central() const { return positive && central && !failed_probe; }
};

// Probes are all (a, g) with |a| <= probe_bound. For a positive central z
// with image of order m, every probe is witnessed by some t <= m (bound + 1),
// so the search below is complete for those probes.
CofinalityReport is_cofinal_central(const CentralExtension& e, const ExtElement& z, long long probe_bound);

// Least t >= 1 with z^-t < g < z^t, searching t <= limit.
std::optional<long long> least_cofinality_witness(const CentralExtension& e, const ExtElement& z,
                                                  const ExtElement& g, long long limit);

struct ExtensionQuotient {
  FiniteGroup group;
  // representatives[i] is the minimal representative of element i: the
  // elements of [id, z) in increasing order, identity first.
  std::vector<ExtElement> representatives;
  InhomCircularOrder order;
};

// E / <z> for a positive cofinal central z, with f_eta(x, y) = k where
// eta(x) eta(y) = z^k eta(xy).
ExtensionQuotient quotient_cocycle(const CentralExtension& e, const ExtElement& z);

// G~_inf / <(n, id)>.
ExtensionQuotient quotient_by_power(const FiniteGroup& g, const InhomCircularOrder& f, int n);

// f^((a1, g1), (a2, g2)) = f_s(a1, a2) if a1 + a2 != n - 1, else f(g1, g2),
// on the materialized Z/n extension.
InhomCircularOrder hat_ordering(const FiniteGroup& g, const InhomCircularOrder& f, int n);

// The unique z != id with f(z, g) = 0 for all g != z^-1 (id for the trivial
// group), cross-checked against the image of the least positive element of
// G~_inf. Throws InvalidInput if g is not cyclic.
Element minimal_generator(const FiniteGroup& g, const InhomCircularOrder& f);

// Least positive element of G~_inf lying over the subgroup k (k != {id}).
ExtElement least_positive_over(const CentralExtension& e, const std::vector<Element>& k);

// True iff the powers of x, restricted to coefficients |a| <= bound, are
// pairwise distinct and cover every (a, g) with |a| <= bound.
bool generates_coefficient_ball(const CentralExtension& e, const ExtElement& x, long long bound);

struct NormalizedSection {
  std::vector<Element> images;
};

struct CentralQuotient {
  QuotientGroup quotient;
  InhomCircularOrder fbar;
  NormalizedSection nu;
  // Minimal generator of (K, f|K) and its positive lift generating rho^-1(K).
  Element z = 0;
  ExtElement z_lift;
  int n = 0;
  // iota f_nu(x, y) = nu(x) nu(y) nu(xy)^-1, logarithms base z in Z/n.
  Cochain2 f_nu;
  // First (x, y) with fbar(x, y) mod n != f_nu(x, y).
  std::optional<std::array<Element, 2>> mismatch;
};

// k must be a normal cyclic subgroup of order >= 2; it is then central.
CentralQuotient quotient_by_cyclic_central(const FiniteGroup& g, const InhomCircularOrder& f,
                                           const std::vector<Element>& k);

}  // namespace circord

#endif  // CIRCORD_EXTENSIONS_HPP_
