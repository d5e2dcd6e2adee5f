#include "circord/extensions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace circord {

CentralExtension::CentralExtension(FiniteGroup base, Cochain2 f, Coefficients c, bool ordering)
    : base_(std::move(base)), f_(std::move(f)), coeff_(c), is_ordering_(ordering) {}

CentralExtension CentralExtension::build(FiniteGroup base, Cochain2 f, Coefficients coefficients) {
  if (f.order() != base.order()) throw InvalidInput("cocycle size does not match group order");
  if (!coefficients.is_integral() && coefficients.modulus < 2) throw InvalidInput("Z/n coefficients need n >= 2");
  if (normalization_failure(base, f)) throw InvalidInput("cocycle is not normalized");
  if (auto w = cocycle_failure(base, f))
    throw InvalidInput("cocycle condition fails at (" + std::to_string((*w)[0]) + ", " + std::to_string((*w)[1]) +
                       ", " + std::to_string((*w)[2]) + ")");
  const bool ordering = !check_inhom(base, f).has_value();
  CentralExtension e(std::move(base), std::move(f), coefficients, ordering);

  const long long n = coefficients.modulus;
  const long long size = n * e.base_.order();
  if (!coefficients.is_integral() && size <= kMaterializeLimit) {
    const int m = e.base_.order();
    const int total = static_cast<int>(size);
    Table t(static_cast<std::size_t>(total), std::vector<int>(static_cast<std::size_t>(total)));
    std::vector<std::string> names(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) {
      const ExtElement x = e.element_at(i);
      names[i] = e.format(x);
      for (int j = 0; j < total; ++j) {
        const ExtElement y{Integer(j / m), j % m};
        const ExtElement p = e.mul(x, y);
        t[i][j] = static_cast<int>(p.a.to_int64()) * m + p.g;
      }
    }
    e.materialized_ = FiniteGroup::from_table(e.base_.name() + "~_" + std::to_string(n), t, std::move(names));
  }
  return e;
}

Integer CentralExtension::reduce(Integer a) const {
  return coeff_.is_integral() ? a : mod_floor(a, Integer(coeff_.modulus));
}

ExtElement CentralExtension::make(const Integer& a, Element g) const {
  base_.check_element(g);
  return {reduce(a), g};
}

ExtElement CentralExtension::mul(const ExtElement& x, const ExtElement& y) const {
  return {reduce(x.a + y.a + Integer(f_(x.g, y.g))), base_.mul(x.g, y.g)};
}

ExtElement CentralExtension::inv(const ExtElement& x) const {
  const Element gi = base_.inv(x.g);
  return {reduce(-x.a - Integer(f_(x.g, gi))), gi};
}

ExtElement CentralExtension::pow(const ExtElement& x, long long t) const {
  ExtElement base = t < 0 ? inv(x) : x;
  unsigned long long k = t < 0 ? 0ULL - static_cast<unsigned long long>(t) : static_cast<unsigned long long>(t);
  ExtElement r = identity();
  while (k) {
    if (k & 1ULL) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::string CentralExtension::format(const ExtElement& x) const {
  return "(" + x.a.str() + ", " + base_.element_name(x.g) + ")";
}

const FiniteGroup& CentralExtension::materialized() const {
  if (!materialized_) throw BoundExceeded("extension is not materialized");
  return *materialized_;
}

Element CentralExtension::index_of(const ExtElement& x) const {
  (void)materialized();
  return static_cast<Element>(reduce(x.a).to_int64()) * base_.order() + x.g;
}

ExtElement CentralExtension::element_at(Element index) const {
  const int m = base_.order();
  if (coeff_.is_integral() || index < 0 || index >= coeff_.modulus * m)
    throw InvalidInput("extension index out of range");
  return {Integer(index / m), index % m};
}

namespace {

void require_ordered(const CentralExtension& e) {
  if (!e.coefficients().is_integral() || !e.is_ordering())
    throw InvalidInput("cone order needs a Z-extension built from a circular ordering");
}

bool is_central(const CentralExtension& e, const ExtElement& z, Element* witness = nullptr) {
  for (int x = 0; x < e.base().order(); ++x) {
    const ExtElement y = e.make(0, x);
    if (e.mul(z, y) != e.mul(y, z)) {
      if (witness) *witness = x;
      return false;
    }
  }
  return true;
}

bool less(const CentralExtension& e, const ExtElement& x, const ExtElement& y) {
  return is_positive(e, e.mul(e.inv(x), y));
}

// Moves elements of a Z-extension into the fundamental domain [id, z) of a
// positive cofinal central z by multiplying with powers of z.
class Reducer {
 public:
  Reducer(const CentralExtension& e, ExtElement z) : e_(e), z_(std::move(z)), zi_(e.inv(z_)) {}

  // Returns (k, w) with x = z^k w and id <= w < z.
  std::pair<long long, ExtElement> operator()(ExtElement x) const {
    long long k = 0;
    while (!less(e_, x, z_)) {
      x = e_.mul(zi_, x);
      ++k;
    }
    while (x != e_.identity() && !is_positive(e_, x)) {
      x = e_.mul(z_, x);
      --k;
    }
    return {k, x};
  }

 private:
  const CentralExtension& e_;
  ExtElement z_, zi_;
};

long long key(const ExtElement& x, int m) { return x.a.to_int64() * m + x.g; }

}  // namespace

bool is_positive(const CentralExtension& e, const ExtElement& x) {
  require_ordered(e);
  return x.a.sign() > 0 || (x.a.is_zero() && x.g != 0);
}

std::strong_ordering cone_compare(const CentralExtension& e, const ExtElement& x, const ExtElement& y) {
  require_ordered(e);
  const ExtElement d = e.mul(e.inv(x), y);
  if (d == e.identity()) return std::strong_ordering::equal;
  return is_positive(e, d) ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool witnesses_cofinality(const CentralExtension& e, const ExtElement& z, const ExtElement& g, long long t) {
  return less(e, e.pow(z, -t), g) && less(e, g, e.pow(z, t));
}

std::optional<long long> least_cofinality_witness(const CentralExtension& e, const ExtElement& z,
                                                  const ExtElement& g, long long limit) {
  require_ordered(e);
  ExtElement up = e.identity(), down = e.identity();
  const ExtElement zi = e.inv(z);
  for (long long t = 1; t <= limit; ++t) {
    up = e.mul(up, z);
    down = e.mul(down, zi);
    if (less(e, down, g) && less(e, g, up)) return t;
  }
  return std::nullopt;
}

CofinalityReport is_cofinal_central(const CentralExtension& e, const ExtElement& z, long long probe_bound) {
  require_ordered(e);
  CofinalityReport r;
  r.positive = is_positive(e, z);
  Element w = 0;
  r.central = is_central(e, z, &w);
  if (!r.central) r.noncommuting = w;
  if (!r.positive || !r.central) return r;
  const long long limit = static_cast<long long>(element_order(e.base(), z.g)) * (probe_bound + 1);
  for (long long a = -probe_bound; a <= probe_bound; ++a)
    for (int x = 0; x < e.base().order(); ++x) {
      const ExtElement g = e.make(a, x);
      auto t = least_cofinality_witness(e, z, g, limit);
      if (!t) {
        r.failed_probe = g;
        return r;
      }
      r.max_witness = std::max(r.max_witness, *t);
    }
  return r;
}

ExtensionQuotient quotient_cocycle(const CentralExtension& e, const ExtElement& z) {
  require_ordered(e);
  if (!is_positive(e, z)) throw InvalidInput("quotient_cocycle: z is not positive");
  if (!is_central(e, z)) throw InvalidInput("quotient_cocycle: z is not central");
  const int m = e.base().order();
  // id <= (a, g) < (c, h) forces 0 <= a <= c + 1.
  const long long c = z.a.to_int64();
  if ((c + 2) * m > kMaterializeLimit * 4LL) throw BoundExceeded("quotient_cocycle: fundamental domain too large");

  std::vector<ExtElement> reps;
  for (long long a = 0; a <= c + 1; ++a)
    for (int g = 0; g < m; ++g) {
      const ExtElement x = e.make(a, g);
      if (less(e, x, z)) reps.push_back(x);
    }
  std::sort(reps.begin(), reps.end(), [&](const ExtElement& x, const ExtElement& y) { return less(e, x, y); });
  if (static_cast<int>(reps.size()) > kMaterializeLimit) throw BoundExceeded("quotient_cocycle: quotient too large");

  std::unordered_map<long long, int> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index[key(reps[i], m)] = static_cast<int>(i);

  const Reducer reduce(e, z);
  const int q = static_cast<int>(reps.size());
  Table t(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
  Cochain2 f(q);
  std::vector<std::string> names(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    names[i] = e.format(reps[i]);
    for (int j = 0; j < q; ++j) {
      auto [k, w] = reduce(e.mul(reps[i], reps[j]));
      t[i][j] = index.at(key(w, m));
      f(i, j) = k;
    }
  }
  FiniteGroup group = FiniteGroup::from_table(e.base().name() + "~ / <" + e.format(z) + ">", t, std::move(names));
  InhomCircularOrder order = validate_inhom(group, std::move(f));
  return {std::move(group), std::move(reps), std::move(order)};
}

ExtensionQuotient quotient_by_power(const FiniteGroup& g, const InhomCircularOrder& f, int n) {
  if (n < 2) throw InvalidInput("quotient_by_power: n must be >= 2");
  if (!f.group().same_table(g)) throw InvalidInput("quotient_by_power: ordering is on a different group");
  const CentralExtension e = CentralExtension::build(g, f.cochain(), Coefficients::integers());
  return quotient_cocycle(e, e.iota(n));
}

InhomCircularOrder hat_ordering(const FiniteGroup& g, const InhomCircularOrder& f, int n) {
  if (n < 2) throw InvalidInput("hat_ordering: n must be >= 2");
  if (!f.group().same_table(g)) throw InvalidInput("hat_ordering: ordering is on a different group");
  if (static_cast<long long>(n) * g.order() > kMaterializeLimit)
    throw BoundExceeded("hat_ordering: n |G| exceeds " + std::to_string(kMaterializeLimit));
  const CentralExtension e = CentralExtension::build(g, f.cochain(), Coefficients::mod(n));
  const FiniteGroup& big = e.materialized();
  Cochain2 h(big.order());
  for (int i = 0; i < big.order(); ++i)
    for (int j = 0; j < big.order(); ++j) {
      const ExtElement x = e.element_at(i), y = e.element_at(j);
      const long long a1 = x.a.to_int64(), a2 = y.a.to_int64();
      h(i, j) = a1 + a2 != n - 1 ? (a1 + a2 >= n ? 1 : 0) : f(x.g, y.g);
    }
  return validate_inhom(big, std::move(h));
}

ExtElement least_positive_over(const CentralExtension& e, const std::vector<Element>& k) {
  require_ordered(e);
  ExtElement best = e.iota(1);
  for (Element x : k) {
    if (x == 0) continue;
    const ExtElement c = e.make(0, x);
    if (less(e, c, best)) best = c;
  }
  return best;
}

Element minimal_generator(const FiniteGroup& g, const InhomCircularOrder& f) {
  if (!f.group().same_table(g)) throw InvalidInput("minimal_generator: ordering is on a different group");
  if (!is_cyclic(g)) throw InvalidInput("minimal_generator: group is not cyclic");
  const int n = g.order();
  if (n == 1) return 0;
  std::vector<Element> found;
  for (int z = 1; z < n; ++z) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (x != g.inv(z) && f(z, x) != 0) ok = false;
    if (ok) found.push_back(z);
  }
  if (found.size() != 1) throw std::logic_error("minimal_generator: expected exactly one candidate");
  const CentralExtension e = CentralExtension::build(g, f.cochain(), Coefficients::integers());
  std::vector<Element> all(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) all[x] = x;
  if (least_positive_over(e, all).g != found[0])
    throw std::logic_error("minimal_generator: lift disagrees with the characterization");
  return found[0];
}

bool generates_coefficient_ball(const CentralExtension& e, const ExtElement& x, long long bound) {
  if (!e.coefficients().is_integral()) throw InvalidInput("generates_coefficient_ball: needs Z coefficients");
  const int m = e.base().order();
  const long long width = 2 * bound + 1;
  std::vector<char> seen(static_cast<std::size_t>(width * m), 0);
  long long hits = 0;
  auto visit = [&](const ExtElement& p) {
    if (abs(p.a) > Integer(bound)) return true;
    const long long slot = (p.a.to_int64() + bound) * m + p.g;
    if (seen[slot]) return false;
    seen[slot] = 1;
    ++hits;
    return true;
  };
  const long long steps = (bound + 1) * m;
  if (!visit(e.identity())) return false;
  ExtElement up = e.identity(), down = e.identity();
  const ExtElement xi = e.inv(x);
  for (long long k = 1; k <= steps; ++k) {
    up = e.mul(up, x);
    down = e.mul(down, xi);
    if (!visit(up) || !visit(down)) return false;
  }
  return hits == width * m;
}

CentralQuotient quotient_by_cyclic_central(const FiniteGroup& g, const InhomCircularOrder& f,
                                           const std::vector<Element>& k) {
  if (!f.group().same_table(g)) throw InvalidInput("quotient_by_cyclic_central: ordering is on a different group");
  QuotientGroup q = quotient(g, k);  // rejects non-subgroups and non-normal subgroups
  const Subgroup sub = subgroup_generated(g, k);
  const int n = sub.group.order();
  if (n < 2) throw InvalidInput("quotient_by_cyclic_central: K must have order >= 2");
  if (!is_cyclic(sub.group)) throw InvalidInput("quotient_by_cyclic_central: K is not cyclic");
  if (!is_central_subset(g, k)) throw InvalidInput("quotient_by_cyclic_central: K is not central");

  Cochain2 fk(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fk(i, j) = f(sub.embedding(i), sub.embedding(j));
  const Element z = sub.embedding(minimal_generator(sub.group, validate_inhom(sub.group, std::move(fk))));

  const CentralExtension e = CentralExtension::build(g, f.cochain(), Coefficients::integers());
  const ExtElement z_lift = least_positive_over(e, k);
  if (z_lift.g != z) throw std::logic_error("quotient_by_cyclic_central: lift of K disagrees with minimal generator");
  const ExtensionQuotient eq = quotient_cocycle(e, z_lift);
  const int m = q.group.order();
  if (eq.group.order() != m) throw std::logic_error("quotient_by_cyclic_central: quotient orders disagree");

  // psi : G/K -> E/<z~>, gK -> (0, g)<z~>, then nu = rho eta psi.
  std::unordered_map<long long, int> index;
  for (std::size_t i = 0; i < eq.representatives.size(); ++i)
    index[key(eq.representatives[i], g.order())] = static_cast<int>(i);
  const Reducer reduce(e, z_lift);
  std::vector<int> psi(static_cast<std::size_t>(m));
  NormalizedSection nu;
  for (int x = 0; x < m; ++x) {
    const ExtElement w = reduce(e.make(0, q.representatives[x])).second;
    psi[x] = index.at(key(w, g.order()));
    nu.images.push_back(e.rho(w));
  }

  Cochain2 fbar(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) fbar(x, y) = eq.order(psi[x], psi[y]);
  InhomCircularOrder fbar_order = validate_inhom(q.group, std::move(fbar));

  std::vector<int> log(static_cast<std::size_t>(g.order()), -1);
  for (int j = 0; j < n; ++j) log[g.pow(z, j)] = j;
  Cochain2 fnu(m);
  std::optional<std::array<Element, 2>> mismatch;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const Element xy = q.group.mul(x, y);
      const Element kk = g.mul(g.mul(nu.images[x], nu.images[y]), g.inv(nu.images[xy]));
      if (log[kk] < 0) throw std::logic_error("quotient_by_cyclic_central: section cocycle leaves K");
      fnu(x, y) = log[kk];
      const long long reduced = ((fbar_order(x, y) % n) + n) % n;
      if (!mismatch && reduced != fnu(x, y)) mismatch = std::array<Element, 2>{x, y};
    }
  return {std::move(q), std::move(fbar_order), std::move(nu), z, z_lift, n, std::move(fnu), mismatch};
}

}  // namespace circord
