// Second cohomology of finite groups with trivial coefficients Z or Z/n,
// through the normalized bar complex and Smith normal form.
//
// Normalized k-cochains vanish whenever an argument is the identity, so they
// are vectors indexed by k-tuples of non-identity elements, the tuple
// (g1, ..., gk) sitting at sum (gi - 1) (|G| - 1)^(k - i).

#ifndef CIRCORD_COHOMOLOGY_HPP_
#define CIRCORD_COHOMOLOGY_HPP_

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "circord/cochain.hpp"
#include "circord/group.hpp"
#include "circord/integer.hpp"
#include "circord/snf.hpp"

namespace circord {

// H^2(G; Z) only needs the SNF of d1 plus a modular rank of d2, which keeps
// |G| = 12 cheap. The Z/n structure needs a full SNF of d2.
inline constexpr int kDefaultCohomologyBound = 12;
inline constexpr int kDefaultModularStructureBound = 10;

// d1 : C1 -> C2 and d2 : C2 -> C3 on normalized cochains.
std::pair<IntMatrix, IntMatrix> coboundary_matrices(const FiniteGroup& g, int order_bound = kDefaultCohomologyBound);

// Rank of a small-entry integer matrix over F_p.
Eigen::Index rank_mod_p(const Matrix<long long>& m, long long p);

struct CohomologyClass {
  // Invariant factors of the ambient group (all >= 2) and residues modulo them.
  std::vector<Integer> moduli;
  std::vector<Integer> coordinates;

  bool is_zero() const;
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

class BarComplex {
 public:
  // Throws BoundExceeded if |G| > order_bound.
  explicit BarComplex(FiniteGroup g, int order_bound = kDefaultCohomologyBound);

  const FiniteGroup& group() const { return g_; }
  int dim1() const { return m1_; }
  int dim2() const { return m1_ * m1_; }
  int index(Element g, Element h) const { return (g - 1) * m1_ + (h - 1); }

  IntVector to_vector(const Cochain2& f) const;
  // Throws std::overflow_error if an entry does not fit in 64 bits.
  Cochain2 to_cochain(const IntVector& v) const;
  // Values of normalized cochains, 0 when an argument is the identity.
  Integer value(const IntVector& f, Element g, Element h) const;
  Integer value(const IntVector& u, Element g) const;

  const IntMatrix& d1() const { return d1_; }
  IntMatrix d2() const;
  IntVector coboundary(const IntVector& u) const { return d1_ * u; }
  bool is_cocycle(const IntVector& f) const;

  // Invariant factors of H^2(G; Z) (all >= 2).
  const std::vector<Integer>& integral_factors() const { return factors_; }
  // Class of an integral cocycle (assumed d2 f = 0).
  CohomologyClass integral_class(const IntVector& f) const;
  // A cocycle representing the given coordinates.
  IntVector integral_lift(const std::vector<Integer>& coordinates) const;

  // Exact u with d1 u = r, if any.
  std::optional<IntVector> solve_coboundary(const IntVector& r) const;
  // u with d1 u = r (mod n), if any.
  std::optional<IntVector> solve_coboundary_mod(const IntVector& r, long long n) const;

 private:
  FiniteGroup g_;
  int m1_ = 0;
  IntMatrix d1_;
  SnfResult<Integer> s1_;
  // Positions i < rank(d1) with factor >= 2, in order.
  std::vector<Eigen::Index> torsion_;
  std::vector<Integer> factors_;
};

class H2Structure {
 public:
  const FiniteGroup& group() const { return complex_->group(); }
  Coefficients coefficients() const { return coeff_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  const BarComplex& complex() const { return *complex_; }

  // Coordinates of the class of a cocycle (for Z/n coefficients, of a
  // cocycle modulo n). Additive and zero exactly on coboundaries.
  CohomologyClass project(const IntVector& f) const;
  CohomologyClass project(const Cochain2& f) const { return project(complex_->to_vector(f)); }

 private:
  friend H2Structure h2_structure(const FiniteGroup&, Coefficients, int);
  friend H2Structure h2_structure(std::shared_ptr<const BarComplex>, Coefficients);
  std::shared_ptr<const BarComplex> complex_;
  Coefficients coeff_;
  std::vector<Integer> factors_;
  // Z/n data: w = diag(1/s) V2^-1 x, coordinates = (Uc w)_rows mod factors.
  IntMatrix v2_inv_;
  std::vector<Integer> s_;
  IntMatrix uc_;
  std::vector<Eigen::Index> rows_;
};

// Bound defaults to kDefaultCohomologyBound for Z, kDefaultModularStructureBound for Z/n.
H2Structure h2_structure(const FiniteGroup& g, Coefficients coefficients, int order_bound = 0);
H2Structure h2_structure(std::shared_ptr<const BarComplex> complex, Coefficients coefficients);

// Throws InvalidInput if f is not a normalized integral 2-cocycle.
CohomologyClass class_of(const BarComplex& c, const Cochain2& f);
CohomologyClass class_of(const FiniteGroup& g, const Cochain2& f);

struct ModTrivialityResult {
  bool trivial = false;
  // d1 u = f (mod n) when trivial.
  std::optional<IntVector> u;
};

struct DivisibilityResult {
  bool divisible = false;
  // f = n mu + d1 u with d2 mu = 0 when divisible.
  std::optional<IntVector> mu;
  std::optional<IntVector> u;
  std::optional<CohomologyClass> mu_class;
};

// Every witness is re-verified by substitution before being returned; a
// failed substitution throws std::logic_error.
ModTrivialityResult trivial_mod_n(const BarComplex& c, const Cochain2& f, long long n);
DivisibilityResult n_divisibility(const BarComplex& c, const Cochain2& f, long long n);

bool is_trivial_mod_n(const FiniteGroup& g, const Cochain2& f, long long n);
DivisibilityResult is_n_divisible(const FiniteGroup& g, const Cochain2& f, long long n);

}  // namespace circord

#endif  // CIRCORD_COHOMOLOGY_HPP_
