#include "circord/cohomology.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace circord {

namespace {

void check_bound(const FiniteGroup& g, int bound) {
  if (g.order() > bound)
    throw BoundExceeded("cohomology: group order " + std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(bound));
}

IntMatrix build_d1(const FiniteGroup& g) {
  const int m1 = g.order() - 1;
  IntMatrix d = IntMatrix::Zero(m1 * m1, m1);
  for (int a = 1; a <= m1; ++a)
    for (int b = 1; b <= m1; ++b) {
      const Eigen::Index row = (a - 1) * m1 + (b - 1);
      d(row, b - 1) += 1;
      if (const Element ab = g.mul(a, b); ab != 0) d(row, ab - 1) -= 1;
      d(row, a - 1) += 1;
    }
  return d;
}

template <typename Scalar>
Matrix<Scalar> build_d2(const FiniteGroup& g) {
  const int m1 = g.order() - 1;
  Matrix<Scalar> d = Matrix<Scalar>::Zero(m1 * m1 * m1, m1 * m1);
  auto col = [m1](Element x, Element y) { return (x - 1) * m1 + (y - 1); };
  for (int a = 1; a <= m1; ++a)
    for (int b = 1; b <= m1; ++b)
      for (int c = 1; c <= m1; ++c) {
        const Eigen::Index row = ((a - 1) * m1 + (b - 1)) * m1 + (c - 1);
        d(row, col(b, c)) += Scalar(1);
        if (const Element ab = g.mul(a, b); ab != 0) d(row, col(ab, c)) -= Scalar(1);
        if (const Element bc = g.mul(b, c); bc != 0) d(row, col(a, bc)) += Scalar(1);
        d(row, col(a, b)) -= Scalar(1);
      }
  return d;
}

}  // namespace

std::pair<IntMatrix, IntMatrix> coboundary_matrices(const FiniteGroup& g, int order_bound) {
  check_bound(g, order_bound);
  return {build_d1(g), build_d2<Integer>(g)};
}

Eigen::Index rank_mod_p(const Matrix<long long>& m, long long p) {
  Matrix<long long> a = m.unaryExpr([p](long long v) { return ((v % p) + p) % p; });
  auto power = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Eigen::Index piv = rank;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.row(piv).swap(a.row(rank));
    const long long inv = power(a(rank, c), p - 2);
    for (Eigen::Index r = rank + 1; r < a.rows(); ++r) {
      if (a(r, c) == 0) continue;
      const long long factor = a(r, c) * inv % p;
      for (Eigen::Index j = c; j < a.cols(); ++j) a(r, j) = ((a(r, j) - factor * a(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

bool CohomologyClass::is_zero() const {
  for (const Integer& c : coordinates)
    if (!c.is_zero()) return false;
  return true;
}

BarComplex::BarComplex(FiniteGroup g, int order_bound) : g_(std::move(g)) {
  check_bound(g_, order_bound);
  m1_ = g_.order() - 1;
  d1_ = build_d1(g_);
  s1_ = smith_normal_form(d1_, SnfOptions{true, true, true});
  for (Eigen::Index i = 0; i < s1_.rank; ++i)
    if (s1_.factors[i] > Integer(1)) {
      torsion_.push_back(i);
      factors_.push_back(s1_.factors[i]);
    }
  if (m1_ == 0) return;
  // H^2(G; Z) is the torsion of coker d1 exactly when ker d2 has rank
  // rank(d1), i.e. rank(d2) = dim C2 - rank(d1). A rank over F_p bounds the
  // rational rank from below, and the rational rank is at most that value.
  const Eigen::Index target = dim2() - s1_.rank;
  const Matrix<long long> d2 = build_d2<long long>(g_);
  for (long long p : {2147483647LL, 2147483629LL, 1000000007LL, 998244353LL})
    if (rank_mod_p(d2, p) == target) return;
  throw std::logic_error("cohomology: could not certify that H^2(G; Z) is finite");
}

IntVector BarComplex::to_vector(const Cochain2& f) const {
  if (f.order() != g_.order()) throw InvalidInput("cochain size does not match group order");
  IntVector v(dim2());
  for (int a = 1; a <= m1_; ++a)
    for (int b = 1; b <= m1_; ++b) v(index(a, b)) = Integer(f(a, b));
  return v;
}

Cochain2 BarComplex::to_cochain(const IntVector& v) const {
  Cochain2 f(g_.order());
  for (int a = 1; a <= m1_; ++a)
    for (int b = 1; b <= m1_; ++b) f(a, b) = v(index(a, b)).to_int64();
  return f;
}

Integer BarComplex::value(const IntVector& f, Element g, Element h) const {
  return g == 0 || h == 0 ? Integer(0) : f(index(g, h));
}

Integer BarComplex::value(const IntVector& u, Element g) const { return g == 0 ? Integer(0) : u(g - 1); }

IntMatrix BarComplex::d2() const { return build_d2<Integer>(g_); }

bool BarComplex::is_cocycle(const IntVector& f) const {
  for (int a = 1; a <= m1_; ++a)
    for (int b = 1; b <= m1_; ++b)
      for (int c = 1; c <= m1_; ++c) {
        const Integer s = value(f, b, c) - value(f, g_.mul(a, b), c) + value(f, a, g_.mul(b, c)) - value(f, a, b);
        if (!s.is_zero()) return false;
      }
  return true;
}

CohomologyClass BarComplex::integral_class(const IntVector& f) const {
  CohomologyClass cls{factors_, {}};
  if (m1_ == 0) return cls;
  const IntVector y = s1_.U * f;
  for (Eigen::Index i = s1_.rank; i < y.size(); ++i)
    if (!y(i).is_zero()) throw InvalidInput("integral_class: vector is not a cocycle");
  for (std::size_t j = 0; j < torsion_.size(); ++j) cls.coordinates.push_back(mod_floor(y(torsion_[j]), factors_[j]));
  return cls;
}

IntVector BarComplex::integral_lift(const std::vector<Integer>& coordinates) const {
  if (coordinates.size() != torsion_.size()) throw InvalidInput("integral_lift: wrong number of coordinates");
  IntVector y = IntVector::Zero(dim2());
  for (std::size_t j = 0; j < torsion_.size(); ++j) y(torsion_[j]) = coordinates[j];
  if (m1_ == 0) return y;
  return s1_.U_inv * y;
}

std::optional<IntVector> BarComplex::solve_coboundary(const IntVector& r) const {
  if (m1_ == 0) return IntVector(0);
  const IntVector y = s1_.U * r;
  IntVector x = IntVector::Zero(m1_);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (i < s1_.rank) {
      if (!divides(s1_.factors[i], y(i))) return std::nullopt;
      x(i) = div_trunc(y(i), s1_.factors[i]);
    } else if (!y(i).is_zero()) {
      return std::nullopt;
    }
  }
  IntVector u = s1_.V * x;
  if (!(d1_ * u == r)) throw std::logic_error("solve_coboundary: substitution check failed");
  return u;
}

std::optional<IntVector> BarComplex::solve_coboundary_mod(const IntVector& r, long long n) const {
  const Integer N(n);
  if (m1_ == 0) return IntVector(0);
  const IntVector y = s1_.U * r;
  IntVector x = IntVector::Zero(m1_);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (i < s1_.rank) {
      const ExtendedGcd e = extended_gcd(s1_.factors[i], N);
      if (!divides(e.g, y(i))) return std::nullopt;
      x(i) = mod_floor(e.s * div_trunc(y(i), e.g), N);
    } else if (!divides(N, y(i))) {
      return std::nullopt;
    }
  }
  IntVector u = (s1_.V * x).unaryExpr([&N](const Integer& v) { return mod_floor(v, N); });
  const IntVector diff = d1_ * u - r;
  for (Eigen::Index i = 0; i < diff.size(); ++i)
    if (!divides(N, diff(i))) throw std::logic_error("solve_coboundary_mod: substitution check failed");
  return u;
}

CohomologyClass H2Structure::project(const IntVector& f) const {
  if (coeff_.is_integral()) return complex_->integral_class(f);
  const Integer n(coeff_.modulus);
  CohomologyClass cls{factors_, {}};
  if (complex_->dim1() == 0) return cls;
  const IntVector x = f.unaryExpr([&n](const Integer& v) { return mod_floor(v, n); });
  IntVector w = v2_inv_ * x;
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    if (!divides(s_[j], w(j))) throw InvalidInput("project: vector is not a cocycle modulo n");
    w(j) = div_trunc(w(j), s_[j]);
  }
  const IntVector c = uc_ * w;
  for (std::size_t k = 0; k < rows_.size(); ++k) cls.coordinates.push_back(mod_floor(c(rows_[k]), factors_[k]));
  return cls;
}

H2Structure h2_structure(std::shared_ptr<const BarComplex> complex, Coefficients coefficients) {
  H2Structure h;
  h.complex_ = std::move(complex);
  h.coeff_ = coefficients;
  if (coefficients.is_integral()) {
    h.factors_ = h.complex_->integral_factors();
    return h;
  }
  if (coefficients.modulus < 2) throw InvalidInput("Z/n coefficients need n >= 2");
  const BarComplex& c = *h.complex_;
  if (c.dim1() == 0) return h;
  const Integer n(coefficients.modulus);
  const IntMatrix d2 = c.d2();
  const SnfResult<Integer> s2 = smith_normal_form(d2, SnfOptions{false, true, true});
  const Eigen::Index m = c.dim2();
  // Cocycles mod n: x = V2 x' with e_j x'_j = 0 mod n, i.e. s_j | x'_j.
  h.s_.assign(static_cast<std::size_t>(m), Integer(1));
  for (Eigen::Index j = 0; j < s2.rank; ++j) h.s_[j] = div_trunc(n, gcd(s2.factors[j], n));
  h.v2_inv_ = s2.V_inv;
  IntMatrix b(m, c.dim1() + m);
  b.leftCols(c.dim1()) = s2.V_inv * c.d1();
  b.rightCols(m) = s2.V_inv * n;
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < b.cols(); ++k) {
      if (!divides(h.s_[j], b(j, k))) throw std::logic_error("h2_structure: coboundaries are not cocycles");
      b(j, k) = div_trunc(b(j, k), h.s_[j]);
    }
  const SnfResult<Integer> sb = smith_normal_form(b, SnfOptions{true, false, false});
  if (sb.rank != m) throw std::logic_error("h2_structure: relation lattice is not of full rank");
  h.uc_ = sb.U;
  for (Eigen::Index i = 0; i < m; ++i)
    if (sb.factors[i] > Integer(1)) {
      h.rows_.push_back(i);
      h.factors_.push_back(sb.factors[i]);
    }
  return h;
}

H2Structure h2_structure(const FiniteGroup& g, Coefficients coefficients, int order_bound) {
  if (order_bound <= 0)
    order_bound = coefficients.is_integral() ? kDefaultCohomologyBound : kDefaultModularStructureBound;
  check_bound(g, order_bound);
  return h2_structure(std::make_shared<const BarComplex>(g, order_bound), coefficients);
}

namespace {

void require_cocycle(const BarComplex& c, const Cochain2& f) {
  if (f.order() != c.group().order()) throw InvalidInput("cochain size does not match group order");
  if (auto w = normalization_failure(c.group(), f)) throw InvalidInput("cochain is not normalized");
  if (auto w = cocycle_failure(c.group(), f))
    throw InvalidInput("not a 2-cocycle: fails at (" + std::to_string((*w)[0]) + ", " + std::to_string((*w)[1]) +
                       ", " + std::to_string((*w)[2]) + ")");
}

void require_modulus(long long n) {
  if (n < 2) throw InvalidInput("n must be >= 2, got " + std::to_string(n));
}

}  // namespace

CohomologyClass class_of(const BarComplex& c, const Cochain2& f) {
  require_cocycle(c, f);
  return c.integral_class(c.to_vector(f));
}

CohomologyClass class_of(const FiniteGroup& g, const Cochain2& f) { return class_of(BarComplex(g), f); }

ModTrivialityResult trivial_mod_n(const BarComplex& c, const Cochain2& f, long long n) {
  require_modulus(n);
  require_cocycle(c, f);
  ModTrivialityResult r;
  r.u = c.solve_coboundary_mod(c.to_vector(f), n);
  r.trivial = r.u.has_value();
  return r;
}

DivisibilityResult n_divisibility(const BarComplex& c, const Cochain2& f, long long n) {
  require_modulus(n);
  const CohomologyClass cls = class_of(c, f);
  const Integer N(n);
  std::vector<Integer> mu_coords;
  for (std::size_t j = 0; j < cls.moduli.size(); ++j) {
    const Integer& t = cls.moduli[j];
    const ExtendedGcd e = extended_gcd(N, t);
    if (!divides(e.g, cls.coordinates[j])) return {};
    mu_coords.push_back(mod_floor(e.s * div_trunc(cls.coordinates[j], e.g), t));
  }
  const IntVector fv = c.to_vector(f);
  IntVector mu = c.integral_lift(mu_coords);
  auto u = c.solve_coboundary(fv - N * mu);
  if (!u) throw std::logic_error("n_divisibility: f - n mu is not a coboundary");
  if (!c.is_cocycle(mu) || !(fv == N * mu + c.coboundary(*u)))
    throw std::logic_error("n_divisibility: witness substitution failed");
  DivisibilityResult r;
  r.divisible = true;
  r.mu_class = c.integral_class(mu);
  r.mu = std::move(mu);
  r.u = std::move(u);
  return r;
}

bool is_trivial_mod_n(const FiniteGroup& g, const Cochain2& f, long long n) {
  return trivial_mod_n(BarComplex(g), f, n).trivial;
}

DivisibilityResult is_n_divisible(const FiniteGroup& g, const Cochain2& f, long long n) {
  return n_divisibility(BarComplex(g), f, n);
}

}  // namespace circord
