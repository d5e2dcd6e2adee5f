// Obstruction spectra Ob(G) = {n >= 2 : G x Z/n is not circularly orderable}.
//
// Spectra are closed upward under divisibility, so they are stored as their
// minimal elements, plus a flag for the full set N>=2.

#ifndef CIRCORD_OBSTRUCTION_HPP_
#define CIRCORD_OBSTRUCTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "circord/group.hpp"

namespace circord {

class ObstructionSpectrum {
 public:
  static ObstructionSpectrum empty() { return ObstructionSpectrum(false, {}); }
  static ObstructionSpectrum all() { return ObstructionSpectrum(true, {}); }
  // Upward closure of the given generators (each >= 2); reduced to the
  // divisibility-minimal ones, sorted.
  static ObstructionSpectrum generated_by(std::vector<long long> generators);

  bool is_all() const { return all_; }
  bool is_empty() const { return !all_ && minimal_.empty(); }
  const std::vector<long long>& minimal() const { return minimal_; }
  // Throws InvalidInput for n < 2.
  bool contains(long long n) const;
  std::string describe() const;

  friend bool operator==(const ObstructionSpectrum&, const ObstructionSpectrum&) = default;

 private:
  ObstructionSpectrum(bool all, std::vector<long long> minimal) : all_(all), minimal_(std::move(minimal)) {}
  bool all_ = false;
  std::vector<long long> minimal_;
};

inline bool spectrum_membership(const ObstructionSpectrum& s, long long n) { return s.contains(n); }

struct TorsionProfile {
  std::vector<long long> orders;
};

// {n : some listed order k has gcd(k, n) != 1}: minimal elements are the
// primes dividing the orders. Orders must be >= 2.
ObstructionSpectrum spectrum_torsion_part(const TorsionProfile& profile);

std::vector<long long> prime_divisors(long long k);

// Exact spectrum of a finite group: N>=2 if it has no circular ordering,
// otherwise the n for which no ordering has an n-divisible class in H^2(G; Z).
// n-divisibility in a group of exponent e depends only on gcd(n, e), so
// scanning n = 2..e is complete.
ObstructionSpectrum spectrum_finite(const FiniteGroup& g);

enum class ExponentVerdict { NotInSpectrum, InSpectrum, SpectrumIsMultiples, Undetermined };
const char* to_string(ExponentVerdict v);

struct ExponentFacts {
  ExponentVerdict verdict = ExponentVerdict::Undetermined;
  // Membership of n, when the verdict decides it.
  std::optional<bool> member;
};

// For a circularly orderable group whose H^2(G; Z) has exponent e. Checked
// in order: e prime and not left orderable gives Ob = eN; gcd(n, e) = 1 gives
// n not in Ob; n = e and not left orderable gives n in Ob.
ExponentFacts exponent_facts(long long e, long long n, bool left_orderable);

enum class ProductVerdict { CircularlyOrderable, NotCircularlyOrderable };

// G x A with min Ob(G) consisting of primes and A bi-invariantly circularly
// orderable: orderable iff the minimal sets are disjoint. Throws InvalidInput
// if min_g has a composite or an entry < 2.
ProductVerdict bico_product_decision(const std::vector<long long>& min_g, const std::vector<long long>& min_a);

struct IteratedBound {
  long long m = 0;  // subgroups with cyclic quotient
  long long e = 1;  // lcm of the quotient orders
  long long bound() const { return m * e; }
};

// Counts kernels N <= A with A/N cyclic. Throws InvalidInput if A is not abelian.
IteratedBound iterated_nonco_bound(const FiniteGroup& abelianization);

// Ob(Mod(S_{g,1})) is everything; the Promislow group has Ob = 4N.
ObstructionSpectrum mapping_class_group_spectrum();
ObstructionSpectrum promislow_spectrum();

}  // namespace circord

#endif  // CIRCORD_OBSTRUCTION_HPP_
