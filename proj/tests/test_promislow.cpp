#include <gtest/gtest.h>

#include <Eigen/Core>
#include <random>
#include <set>

#include "circord/promislow.hpp"

using namespace circord;

namespace {

// Affine maps as 4x4 integer matrices acting on (x, 1), translations doubled.
using Affine = Eigen::Matrix<long long, 4, 4>;

Affine affine(int d0, int d1, int d2, long long w0, long long w1, long long w2) {
  Affine m = Affine::Zero();
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(0, 3) = w0;
  m(1, 3) = w1;
  m(2, 3) = w2;
  m(3, 3) = 1;
  return m;
}

const Affine kA = affine(1, -1, -1, 1, 1, 0);
const Affine kB = affine(-1, 1, -1, 0, 1, 1);

Affine inverse(const Affine& m) {
  // Diagonal +-1 linear part is its own inverse.
  Affine r = Affine::Identity();
  for (int i = 0; i < 3; ++i) {
    r(i, i) = m(i, i);
    r(i, 3) = -m(i, i) * m(i, 3);
  }
  return r;
}

Affine word_matrix(const std::string& w) {
  Affine m = Affine::Identity();
  for (char c : w) {
    const Affine g = c == 'a' ? kA : c == 'A' ? inverse(kA) : c == 'b' ? kB : inverse(kB);
    m = m * g;
  }
  return m;
}

Affine to_affine(const PromElement& x) {
  const auto d = diagonal(x.m);
  return affine(d[0], d[1], d[2], x.w[0], x.w[1], x.w[2]);
}

std::string random_word(std::mt19937_64& rng, int len) {
  static const char letters[] = "aAbB";
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s;
  for (int i = 0; i < len; ++i) s += letters[pick(rng)];
  return s;
}

}  // namespace

TEST(Promislow, GeneratorArithmetic) {
  EXPECT_EQ(prom_mul(prom_a(), prom_a()), (PromElement{PointGroup::I, {2, 0, 0}}));
  EXPECT_EQ(prom_mul(prom_inv(prom_b()), prom_b()), prom_identity());
  EXPECT_EQ(evaluate(kRelator1), prom_identity());
  EXPECT_EQ(evaluate(kRelator2), prom_identity());
  EXPECT_EQ(evaluate(""), prom_identity());
  EXPECT_THROW(evaluate("abc"), InvalidInput);
}

TEST(Promislow, MatchesAffineMatrices) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const std::string w = random_word(rng, t % 13);
    EXPECT_EQ(to_affine(evaluate(w)), word_matrix(w)) << w;
  }
}

TEST(Promislow, Parity) {
  EXPECT_TRUE(has_valid_parity(prom_a()));
  EXPECT_FALSE(has_valid_parity(PromElement{PointGroup::A, {0, 0, 0}}));
  EXPECT_THROW(check_parity(PromElement{PointGroup::I, {1, 0, 0}}), InvalidInput);
  for (const PromElement& x : ball(3)) EXPECT_TRUE(has_valid_parity(x));
}

TEST(Promislow, BallSizesMatchOracle) {
  std::set<std::vector<long long>> seen;
  std::vector<Affine> frontier{Affine::Identity()};
  auto key = [](const Affine& m) { return std::vector<long long>(m.data(), m.data() + 16); };
  seen.insert(key(frontier[0]));
  for (int r = 0; r <= 4; ++r) {
    EXPECT_EQ(ball(r).size(), seen.size()) << r;
    std::vector<Affine> next;
    for (const Affine& m : frontier)
      for (const Affine& g : {kA, inverse(kA), kB, inverse(kB)}) {
        const Affine p = m * g;
        if (seen.insert(key(p)).second) next.push_back(p);
      }
    frontier = next;
  }
  EXPECT_THROW(ball(9), BoundExceeded);
}

TEST(Promislow, TorsionFree) {
  for (const PromElement& x : ball(4)) {
    if (x == prom_identity()) continue;
    for (long long k = 1; k <= 6; ++k) EXPECT_NE(prom_pow(x, k), prom_identity());
  }
}

TEST(Promislow, KernelCone) {
  EXPECT_TRUE(kernel_is_positive(prom_mul(prom_b(), prom_b())));
  EXPECT_FALSE(kernel_is_positive(PromElement{PointGroup::I, {-2, 0, 0}}));
  EXPECT_FALSE(kernel_is_positive(prom_identity()));
  EXPECT_THROW(kernel_is_positive(prom_a()), InvalidInput);
  EXPECT_EQ(phi(prom_a()), 1);
  EXPECT_EQ(phi(prom_b()), 0);
  for (const PromElement& x : ball(4)) {
    if (phi(x) != 0 || x == prom_identity()) continue;
    EXPECT_NE(kernel_is_positive(x), kernel_is_positive(prom_inv(x)));
  }
}

TEST(Promislow, BIsPositiveInKernel) {
  // b itself lies in the kernel of phi with w_y = 1.
  EXPECT_EQ(phi(prom_b()), 0);
  EXPECT_TRUE(kernel_is_positive(prom_b()));
}

TEST(Promislow, CircularOrderAxiomsOnSmallBall) {
  const auto b = ball(1);
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b) {
        const int c = promislow_circular_order(x, y, z);
        EXPECT_EQ(c == 0, x == y || y == z || x == z);
        EXPECT_EQ(promislow_circular_order(y, x, z), -c);
        EXPECT_EQ(promislow_circular_order(y, z, x), c);
        for (const auto& g : {prom_a(), prom_b(), prom_inv(prom_a())})
          EXPECT_EQ(promislow_circular_order(prom_mul(g, x), prom_mul(g, y), prom_mul(g, z)), c);
      }
}

TEST(Promislow, Abelianization) {
  EXPECT_EQ(abelianization_image(prom_a()), std::make_pair(1, 0));
  EXPECT_EQ(abelianization_image(prom_b()), std::make_pair(0, 1));
  EXPECT_EQ(abelianization_image(prom_identity()), std::make_pair(0, 0));
  std::set<std::pair<int, int>> image;
  for (const auto& [x, w] : ball_with_words(5)) {
    int ea = 0, eb = 0;
    for (char c : w) {
      ea += c == 'a' ? 1 : c == 'A' ? -1 : 0;
      eb += c == 'b' ? 1 : c == 'B' ? -1 : 0;
    }
    EXPECT_EQ(abelianization_image(x), std::make_pair(((ea % 4) + 4) % 4, ((eb % 4) + 4) % 4)) << w;
    image.insert(abelianization_image(x));
  }
  EXPECT_EQ(image.size(), 16u);
}

TEST(Promislow, DemoPasses) {
  PromislowDemoOptions o;
  o.samples = 20000;
  for (const CheckResult& c : promislow_demo(o)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Promislow, DemoDeterministicAndBounded) {
  PromislowDemoOptions o;
  o.samples = 2000;
  o.sample_radius = 3;
  const auto first = promislow_demo(o);
  const auto again = promislow_demo(o);
  ASSERT_EQ(first.size(), again.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].passed, again[i].passed);
    EXPECT_EQ(first[i].cases, again[i].cases);
  }
  o.sample_radius = 9;
  EXPECT_THROW(promislow_demo(o), BoundExceeded);
}

TEST(Promislow, Format) {
  EXPECT_FALSE(format(prom_a()).empty());
  EXPECT_NE(format(prom_a()), format(prom_b()));
}
