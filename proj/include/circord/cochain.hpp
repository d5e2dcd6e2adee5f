#ifndef CIRCORD_COCHAIN_HPP_
#define CIRCORD_COCHAIN_HPP_

#include <array>
#include <optional>
#include <vector>

#include "circord/group.hpp"

namespace circord {

// modulus 0 means Z, otherwise Z/modulus with modulus >= 2.
struct Coefficients {
  long long modulus = 0;

  static Coefficients integers() { return {0}; }
  static Coefficients mod(long long n);
  bool is_integral() const { return modulus == 0; }
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

// Integer-valued function on G x G, stored row-major. Used for inhomogeneous
// 2-cochains with trivial coefficients.
class Cochain2 {
 public:
  Cochain2() = default;
  explicit Cochain2(int order, long long fill = 0)
      : n_(order), v_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), fill) {}

  static Cochain2 from_rows(const std::vector<std::vector<long long>>& rows);

  int order() const { return n_; }
  long long operator()(Element g, Element h) const { return v_[idx(g, h)]; }
  long long& operator()(Element g, Element h) { return v_[idx(g, h)]; }
  std::vector<std::vector<long long>> rows() const;

  friend bool operator==(const Cochain2&, const Cochain2&) = default;

 private:
  std::size_t idx(Element g, Element h) const {
    return static_cast<std::size_t>(g) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(h);
  }
  int n_ = 0;
  std::vector<long long> v_;
};

// First (g, h) with f(id, g) or f(g, id) nonzero, as {g, id} / {id, g}.
std::optional<std::array<Element, 2>> normalization_failure(const FiniteGroup& g, const Cochain2& f);

// First (g, h, k), in lexicographic order, where
// f(h,k) - f(gh,k) + f(g,hk) - f(g,h) != 0.
std::optional<std::array<Element, 3>> cocycle_failure(const FiniteGroup& g, const Cochain2& f);

// Same identity with values taken modulo m (m >= 2).
std::optional<std::array<Element, 3>> cocycle_failure_mod(const FiniteGroup& g, const Cochain2& f, long long m);

}  // namespace circord

#endif  // CIRCORD_COCHAIN_HPP_
