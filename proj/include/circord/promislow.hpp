// The Promislow (Hantzsche-Wendt) group <a, b | a b^2 a^-1 b^2, b a^2 b^-1 a^2>
// realized as affine isometries x -> Mx + w/2 of R^3, with
//   a = (A, (1, 1, 0)),  b = (B, (0, 1, 1)),
//   A = diag(1, -1, -1), B = diag(-1, 1, -1).
// Translations are stored doubled so all arithmetic is integral; w mod 2 is
// then fixed by M (the parity invariant).

#ifndef CIRCORD_PROMISLOW_HPP_
#define CIRCORD_PROMISLOW_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circord/orders.hpp"

namespace circord {

enum class PointGroup : unsigned char { I, A, B, AB };

const char* to_string(PointGroup m);
// Diagonal entries of the point-group matrix.
std::array<int, 3> diagonal(PointGroup m);
// w mod 2 required for each point-group part.
std::array<int, 3> parity(PointGroup m);

struct PromElement {
  PointGroup m = PointGroup::I;
  std::array<long long, 3> w{0, 0, 0};

  friend bool operator==(const PromElement&, const PromElement&) = default;
  friend auto operator<=>(const PromElement&, const PromElement&) = default;
};

PromElement prom_identity();
PromElement prom_a();
PromElement prom_b();

bool has_valid_parity(const PromElement& x);
// Throws InvalidInput on a parity violation.
void check_parity(const PromElement& x);

PromElement prom_mul(const PromElement& x, const PromElement& y);
PromElement prom_inv(const PromElement& x);
PromElement prom_pow(const PromElement& x, long long t);

// Words over a, A = a^-1, b, B = b^-1.
using PromWord = std::string;
// Throws InvalidInput on letters outside {a, A, b, B}.
PromElement evaluate(std::string_view word);

inline constexpr std::string_view kRelator1 = "abbAbb";
inline constexpr std::string_view kRelator2 = "baaBaa";

// phi(a) = 1, phi(b) = 0: 1 iff M in {A, AB}.
int phi(const PromElement& x);

// Cone on ker phi: w_y > 0, or w_y = 0 and (w_x, w_z) lexicographically
// positive. Throws InvalidInput if phi(x) != 0.
bool kernel_is_positive(const PromElement& x);
LeftOrderOracle<PromElement> kernel_order();

struct PromOps {
  PromElement identity() const { return prom_identity(); }
  PromElement mul(const PromElement& x, const PromElement& y) const { return prom_mul(x, y); }
  PromElement inv(const PromElement& x) const { return prom_inv(x); }
};

// Lexicographic circular ordering from 1 -> ker phi -> G -> Z/2 -> 1.
int promislow_circular_order(const PromElement& g1, const PromElement& g2, const PromElement& g3);

inline constexpr int kMaxBallRadius = 8;

// Distinct elements of word length <= radius, in breadth-first order with
// letters tried as a, A, b, B. Throws BoundExceeded for radius > 8.
std::vector<PromElement> ball(int radius);
// Same, paired with a shortest word for each element.
std::vector<std::pair<PromElement, PromWord>> ball_with_words(int radius);

// Image in Z/4 x Z/4 = G/G', sending a to (1, 0) and b to (0, 1).
std::pair<int, int> abelianization_image(const PromElement& x);

std::string format(const PromElement& x);

// Axiom checks behind the demo: relators, torsion-freeness, phi, the kernel
// cone, the circular-order axioms (exhaustive on a small ball, seeded random
// quadruples on a larger one) and the abelianization.
struct CheckResult {
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string detail;  // first failure
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct PromislowDemoOptions {
  std::uint64_t seed = kDefaultSeed;
  int sample_radius = 5;
  long long samples = 100000;
  int exhaustive_radius = 2;
};

// Throws BoundExceeded if a radius exceeds kMaxBallRadius.
std::vector<CheckResult> promislow_demo(const PromislowDemoOptions& options = {});

}  // namespace circord

#endif  // CIRCORD_PROMISLOW_HPP_
