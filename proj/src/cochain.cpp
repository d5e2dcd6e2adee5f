#include "circord/cochain.hpp"

namespace circord {

Coefficients Coefficients::mod(long long n) {
  if (n < 2) throw InvalidInput("Z/n coefficients need n >= 2, got " + std::to_string(n));
  return {n};
}


Cochain2 Cochain2::from_rows(const std::vector<std::vector<long long>>& rows) {
  const int n = static_cast<int>(rows.size());
  Cochain2 c(n);
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(rows[g].size()) != n)
      throw InvalidInput("cochain row " + std::to_string(g) + " has wrong length");
    for (int h = 0; h < n; ++h) c(g, h) = rows[g][h];
  }
  return c;
}

std::vector<std::vector<long long>> Cochain2::rows() const {
  std::vector<std::vector<long long>> out(static_cast<std::size_t>(n_));
  for (int g = 0; g < n_; ++g) out[g].assign(v_.begin() + g * n_, v_.begin() + (g + 1) * n_);
  return out;
}

std::optional<std::array<Element, 2>> normalization_failure(const FiniteGroup& g, const Cochain2& f) {
  for (int x = 0; x < g.order(); ++x) {
    if (f(0, x) != 0) return std::array<Element, 2>{0, x};
    if (f(x, 0) != 0) return std::array<Element, 2>{x, 0};
  }
  return std::nullopt;
}

namespace {

template <typename Reduce>
std::optional<std::array<Element, 3>> scan(const FiniteGroup& g, const Cochain2& f, Reduce reduce) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (int c = 0; c < n; ++c) {
        const long long s = f(b, c) - f(ab, c) + f(a, g.mul(b, c)) - f(a, b);
        if (reduce(s) != 0) return std::array<Element, 3>{a, b, c};
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<std::array<Element, 3>> cocycle_failure(const FiniteGroup& g, const Cochain2& f) {
  if (f.order() != g.order()) throw InvalidInput("cochain size does not match group order");
  return scan(g, f, [](long long s) { return s; });
}

std::optional<std::array<Element, 3>> cocycle_failure_mod(const FiniteGroup& g, const Cochain2& f, long long m) {
  if (f.order() != g.order()) throw InvalidInput("cochain size does not match group order");
  return scan(g, f, [m](long long s) { return ((s % m) + m) % m; });
}

}  // namespace circord
