#include "circord/obstruction.hpp"

#include <algorithm>
#include <numeric>

#include "circord/cohomology.hpp"
#include "circord/orders.hpp"

namespace circord {

ObstructionSpectrum ObstructionSpectrum::generated_by(std::vector<long long> generators) {
  for (long long g : generators)
    if (g < 2) throw InvalidInput("spectrum generators must be >= 2, got " + std::to_string(g));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<long long> minimal;
  for (long long g : generators)
    if (std::none_of(minimal.begin(), minimal.end(), [g](long long m) { return g % m == 0; })) minimal.push_back(g);
  return ObstructionSpectrum(false, std::move(minimal));
}

bool ObstructionSpectrum::contains(long long n) const {
  if (n < 2) throw InvalidInput("spectrum membership needs n >= 2, got " + std::to_string(n));
  if (all_) return true;
  return std::any_of(minimal_.begin(), minimal_.end(), [n](long long m) { return n % m == 0; });
}

std::string ObstructionSpectrum::describe() const {
  if (all_) return "N>=2";
  if (minimal_.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < minimal_.size(); ++i) s += (i ? " u " : "") + std::to_string(minimal_[i]) + "N";
  return s;
}

std::vector<long long> prime_divisors(long long k) {
  std::vector<long long> out;
  for (long long p = 2; p * p <= k; ++p)
    if (k % p == 0) {
      out.push_back(p);
      while (k % p == 0) k /= p;
    }
  if (k > 1) out.push_back(k);
  return out;
}

ObstructionSpectrum spectrum_torsion_part(const TorsionProfile& profile) {
  std::vector<long long> primes;
  for (long long k : profile.orders) {
    if (k < 2) throw InvalidInput("torsion orders must be >= 2, got " + std::to_string(k));
    for (long long p : prime_divisors(k)) primes.push_back(p);
  }
  return ObstructionSpectrum::generated_by(std::move(primes));
}

ObstructionSpectrum spectrum_finite(const FiniteGroup& g) {
  if (g.order() == 1) return ObstructionSpectrum::empty();
  const std::vector<Arrangement> orders = enumerate_circular_orders(g);
  if (orders.empty()) return ObstructionSpectrum::all();
  const BarComplex complex(g);
  long long e = 1;
  for (const Integer& t : complex.integral_factors()) e = std::lcm(e, t.to_int64());
  std::vector<Cochain2> cocycles;
  for (const Arrangement& a : orders) cocycles.push_back(arrangement_to_inhom(g, a).cochain());
  std::vector<long long> members;
  for (long long n = 2; n <= e; ++n) {
    const bool some_divisible = std::any_of(cocycles.begin(), cocycles.end(), [&](const Cochain2& f) {
      return n_divisibility(complex, f, n).divisible;
    });
    if (!some_divisible) members.push_back(n);
  }
  return ObstructionSpectrum::generated_by(std::move(members));
}

const char* to_string(ExponentVerdict v) {
  switch (v) {
    case ExponentVerdict::NotInSpectrum: return "not-in-spectrum";
    case ExponentVerdict::InSpectrum: return "in-spectrum";
    case ExponentVerdict::SpectrumIsMultiples: return "spectrum-equals-eN";
    case ExponentVerdict::Undetermined: return "undetermined";
  }
  return "unknown";
}

ExponentFacts exponent_facts(long long e, long long n, bool left_orderable) {
  if (e < 2 || n < 2) throw InvalidInput("exponent_facts needs e, n >= 2");
  const bool prime = prime_divisors(e) == std::vector<long long>{e};
  if (prime && !left_orderable) return {ExponentVerdict::SpectrumIsMultiples, n % e == 0};
  if (std::gcd(n, e) == 1) return {ExponentVerdict::NotInSpectrum, false};
  if (n == e && !left_orderable) return {ExponentVerdict::InSpectrum, true};
  return {};
}

ProductVerdict bico_product_decision(const std::vector<long long>& min_g, const std::vector<long long>& min_a) {
  for (long long p : min_g)
    if (p < 2 || prime_divisors(p) != std::vector<long long>{p})
      throw InvalidInput("bico_product_decision: min Ob(G) must consist of primes, got " + std::to_string(p));
  for (long long p : min_g)
    if (std::find(min_a.begin(), min_a.end(), p) != min_a.end()) return ProductVerdict::NotCircularlyOrderable;
  return ProductVerdict::CircularlyOrderable;
}

IteratedBound iterated_nonco_bound(const FiniteGroup& a) {
  if (!a.is_abelian()) throw InvalidInput("iterated_nonco_bound: group is not abelian");
  IteratedBound b;
  for (const std::vector<Element>& n : all_subgroups(a)) {
    const QuotientGroup q = quotient(a, n);
    if (!is_cyclic(q.group)) continue;
    ++b.m;
    b.e = std::lcm(b.e, static_cast<long long>(q.group.order()));
  }
  return b;
}

ObstructionSpectrum mapping_class_group_spectrum() { return ObstructionSpectrum::all(); }
ObstructionSpectrum promislow_spectrum() { return ObstructionSpectrum::generated_by({4}); }

}  // namespace circord
