#include "circord/promislow.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace circord {

namespace {

PointGroup from_diagonal(const std::array<int, 3>& d) {
  for (PointGroup m : {PointGroup::I, PointGroup::A, PointGroup::B, PointGroup::AB})
    if (diagonal(m) == d) return m;
  throw std::logic_error("promislow: diagonal outside the point group");
}

long long mod4(long long v) { return ((v % 4) + 4) % 4; }

}  // namespace

const char* to_string(PointGroup m) {
  switch (m) {
    case PointGroup::I: return "I";
    case PointGroup::A: return "A";
    case PointGroup::B: return "B";
    case PointGroup::AB: return "AB";
  }
  return "?";
}

std::array<int, 3> diagonal(PointGroup m) {
  switch (m) {
    case PointGroup::I: return {1, 1, 1};
    case PointGroup::A: return {1, -1, -1};
    case PointGroup::B: return {-1, 1, -1};
    case PointGroup::AB: return {-1, -1, 1};
  }
  return {1, 1, 1};
}

std::array<int, 3> parity(PointGroup m) {
  switch (m) {
    case PointGroup::I: return {0, 0, 0};
    case PointGroup::A: return {1, 1, 0};
    case PointGroup::B: return {0, 1, 1};
    case PointGroup::AB: return {1, 0, 1};
  }
  return {0, 0, 0};
}

PromElement prom_identity() { return {}; }
PromElement prom_a() { return {PointGroup::A, {1, 1, 0}}; }
PromElement prom_b() { return {PointGroup::B, {0, 1, 1}}; }

bool has_valid_parity(const PromElement& x) {
  const auto p = parity(x.m);
  for (int i = 0; i < 3; ++i)
    if (((x.w[i] % 2) + 2) % 2 != p[i]) return false;
  return true;
}

void check_parity(const PromElement& x) {
  if (!has_valid_parity(x)) throw InvalidInput("promislow: translation parity does not match " + format(x));
}

PromElement prom_mul(const PromElement& x, const PromElement& y) {
  check_parity(x);
  check_parity(y);
  const auto d1 = diagonal(x.m), d2 = diagonal(y.m);
  PromElement r;
  r.m = from_diagonal({d1[0] * d2[0], d1[1] * d2[1], d1[2] * d2[2]});
  for (int i = 0; i < 3; ++i) r.w[i] = x.w[i] + d1[i] * y.w[i];
  return r;
}

PromElement prom_inv(const PromElement& x) {
  check_parity(x);
  // M is an involution, so (M, w)^-1 = (M, -M w).
  const auto d = diagonal(x.m);
  return {x.m, {-d[0] * x.w[0], -d[1] * x.w[1], -d[2] * x.w[2]}};
}

PromElement prom_pow(const PromElement& x, long long t) {
  PromElement base = t < 0 ? prom_inv(x) : x;
  unsigned long long k = t < 0 ? 0ULL - static_cast<unsigned long long>(t) : static_cast<unsigned long long>(t);
  PromElement r;
  while (k) {
    if (k & 1ULL) r = prom_mul(r, base);
    base = prom_mul(base, base);
    k >>= 1;
  }
  return r;
}

PromElement evaluate(std::string_view word) {
  PromElement r;
  for (char c : word) {
    switch (c) {
      case 'a': r = prom_mul(r, prom_a()); break;
      case 'A': r = prom_mul(r, prom_inv(prom_a())); break;
      case 'b': r = prom_mul(r, prom_b()); break;
      case 'B': r = prom_mul(r, prom_inv(prom_b())); break;
      default: throw InvalidInput(std::string("promislow: bad letter '") + c + "' in word");
    }
  }
  return r;
}

int phi(const PromElement& x) { return x.m == PointGroup::A || x.m == PointGroup::AB ? 1 : 0; }

bool kernel_is_positive(const PromElement& x) {
  if (phi(x) != 0) throw InvalidInput("kernel_is_positive: element is not in ker phi: " + format(x));
  if (x.w[1] != 0) return x.w[1] > 0;
  if (x.w[0] != 0) return x.w[0] > 0;
  return x.w[2] > 0;
}

LeftOrderOracle<PromElement> kernel_order() { return {kernel_is_positive}; }

int promislow_circular_order(const PromElement& g1, const PromElement& g2, const PromElement& g3) {
  static const HomCircularOrder z2 = arrangement_to_hom(cyclic_group(2), {0, 1});
  static const LexicographicCircularOrder<PromOps, int> lex(
      PromOps{}, kernel_order(), [](int a, int b, int c) { return z2(a, b, c); },
      [](const PromElement& x) { return phi(x); });
  return lex(g1, g2, g3);
}

std::vector<std::pair<PromElement, PromWord>> ball_with_words(int radius) {
  if (radius < 0) throw InvalidInput("ball: radius must be >= 0");
  if (radius > kMaxBallRadius)
    throw BoundExceeded("ball: radius " + std::to_string(radius) + " exceeds " + std::to_string(kMaxBallRadius));
  std::vector<std::pair<PromElement, PromWord>> out{{prom_identity(), ""}};
  std::set<PromElement> seen{prom_identity()};
  std::size_t begin = 0;
  for (int r = 0; r < radius; ++r) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : {'a', 'A', 'b', 'B'}) {
        PromElement y = prom_mul(out[i].first, evaluate(std::string_view(&c, 1)));
        if (seen.insert(y).second) out.emplace_back(y, out[i].second + c);
      }
    begin = end;
  }
  return out;
}

std::vector<PromElement> ball(int radius) {
  std::vector<PromElement> out;
  for (auto& [x, w] : ball_with_words(radius)) out.push_back(x);
  return out;
}

std::pair<int, int> abelianization_image(const PromElement& x) {
  check_parity(x);
  // x = (I, t) r_M with r_M in {id, a, b, ab}; translations (I, v) map to
  // (v_x + v_z, v_y + v_z) since a^2 = (I, (2,0,0)), b^2 = (I, (0,2,0)) and
  // (ab)^2 = (I, (0,0,-2)).
  static const std::array<std::pair<PromElement, std::pair<int, int>>, 4> reps{{
      {prom_identity(), {0, 0}},
      {prom_a(), {1, 0}},
      {prom_b(), {0, 1}},
      {prom_mul(prom_a(), prom_b()), {1, 1}},
  }};
  const auto& [r, img] = reps[static_cast<std::size_t>(x.m)];
  const std::array<long long, 3> t{x.w[0] - r.w[0], x.w[1] - r.w[1], x.w[2] - r.w[2]};
  return {static_cast<int>(mod4(t[0] + t[2] + img.first)), static_cast<int>(mod4(t[1] + t[2] + img.second))};
}

std::string format(const PromElement& x) {
  return std::string("(") + to_string(x.m) + ", [" + std::to_string(x.w[0]) + ", " + std::to_string(x.w[1]) + ", " +
         std::to_string(x.w[2]) + "])";
}

namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }
  void expect(bool ok, const std::function<std::string()>& detail) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = detail();
    }
  }
  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

std::string triple(const PromElement& x, const PromElement& y, const PromElement& z) {
  return format(x) + ", " + format(y) + ", " + format(z);
}

// Vanishing set and antisymmetry under all six permutations.
void check_triple(Check& vanishing, Check& antisymmetry, const PromElement& x, const PromElement& y,
                  const PromElement& z) {
  const int c = promislow_circular_order(x, y, z);
  const bool degenerate = x == y || y == z || x == z;
  vanishing.expect((c == 0) == degenerate, [&] { return "c(" + triple(x, y, z) + ") = " + std::to_string(c); });
  const std::array<int, 6> perm{
      c,
      promislow_circular_order(y, z, x),
      promislow_circular_order(z, x, y),
      -promislow_circular_order(y, x, z),
      -promislow_circular_order(x, z, y),
      -promislow_circular_order(z, y, x),
  };
  antisymmetry.expect(std::all_of(perm.begin(), perm.end(), [c](int v) { return v == c; }),
                      [&] { return "permutations of (" + triple(x, y, z) + ")"; });
}

void check_invariance(Check& check, const PromElement& h, const PromElement& x, const PromElement& y,
                      const PromElement& z) {
  check.expect(promislow_circular_order(prom_mul(h, x), prom_mul(h, y), prom_mul(h, z)) ==
                   promislow_circular_order(x, y, z),
               [&] { return "h = " + format(h) + " on (" + triple(x, y, z) + ")"; });
}

void check_cocycle(Check& check, const PromElement& a, const PromElement& b, const PromElement& c,
                   const PromElement& d) {
  const int s = promislow_circular_order(b, c, d) - promislow_circular_order(a, c, d) +
                promislow_circular_order(a, b, d) - promislow_circular_order(a, b, c);
  check.expect(s == 0, [&] { return "(" + triple(a, b, c) + ", " + format(d) + ")"; });
}

}  // namespace

std::vector<CheckResult> promislow_demo(const PromislowDemoOptions& options) {
  if (options.samples < 0) throw InvalidInput("promislow_demo: samples must be >= 0");
  const std::vector<PromElement> sample_ball = ball(options.sample_radius);
  const std::vector<PromElement> small = ball(options.exhaustive_radius);
  std::vector<CheckResult> out;

  Check relators("relators");
  for (std::string_view r : {kRelator1, kRelator2})
    relators.expect(evaluate(r) == prom_identity(), [&] { return std::string(r) + " = " + format(evaluate(r)); });
  out.push_back(relators.result());

  Check torsion("torsion-free on ball(4)");
  for (const PromElement& x : ball(4)) {
    if (x == prom_identity()) continue;
    for (int t = 1; t <= 8; ++t)
      torsion.expect(prom_pow(x, t) != prom_identity(), [&] { return format(x) + "^" + std::to_string(t); });
  }
  out.push_back(torsion.result());

  Check hom("phi homomorphism onto Z/2 with kernel {I, B}");
  const std::array<PromElement, 4> reps{prom_identity(), prom_a(), prom_b(), prom_mul(prom_a(), prom_b())};
  for (const PromElement& x : reps)
    for (const PromElement& y : reps)
      hom.expect(phi(prom_mul(x, y)) == (phi(x) + phi(y)) % 2, [&] { return format(x) + " * " + format(y); });
  for (const PromElement& x : reps)
    hom.expect((phi(x) == 0) == (x.m == PointGroup::I || x.m == PointGroup::B), [&] { return format(x); });
  hom.expect(phi(prom_a()) == 1 && phi(prom_b()) == 0, [] { return std::string("phi(a), phi(b)"); });
  out.push_back(hom.result());

  Check trichotomy("kernel cone trichotomy on ball(5)");
  std::vector<PromElement> positive;
  for (const PromElement& x : ball(5)) {
    if (phi(x) != 0) continue;
    const bool id = x == prom_identity();
    const bool p = !id && kernel_is_positive(x);
    const bool n = !id && kernel_is_positive(prom_inv(x));
    trichotomy.expect(static_cast<int>(id) + static_cast<int>(p) + static_cast<int>(n) == 1,
                      [&] { return format(x); });
  }
  for (const PromElement& x : ball(4))
    if (phi(x) == 0 && x != prom_identity() && kernel_is_positive(x)) positive.push_back(x);
  out.push_back(trichotomy.result());

  Check closure("kernel cone closed under products on ball(4)");
  for (const PromElement& x : positive)
    for (const PromElement& y : positive)
      closure.expect(kernel_is_positive(prom_mul(x, y)), [&] { return format(x) + " * " + format(y); });
  out.push_back(closure.result());

  const std::string tag = " on ball(" + std::to_string(options.exhaustive_radius) + ")";
  Check vanishing("vanishing set" + tag), antisymmetry("antisymmetry" + tag);
  Check invariance("left invariance" + tag), cocycle("cocycle identity" + tag);
  for (const PromElement& a : small)
    for (const PromElement& b : small)
      for (const PromElement& c : small) {
        check_triple(vanishing, antisymmetry, a, b, c);
        for (const PromElement& d : small) {
          check_invariance(invariance, d, a, b, c);
          check_cocycle(cocycle, a, b, c, d);
        }
      }
  for (const Check* c : {&vanishing, &antisymmetry, &invariance, &cocycle}) out.push_back(c->result());

  const std::string rtag = " on " + std::to_string(options.samples) + " random quadruples from ball(" +
                           std::to_string(options.sample_radius) + "), seed " + std::to_string(options.seed);
  Check rv("vanishing set" + rtag), ra("antisymmetry" + rtag), ri("left invariance" + rtag),
      rc("cocycle identity" + rtag);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, sample_ball.size() - 1);
  for (long long s = 0; s < options.samples; ++s) {
    const PromElement& a = sample_ball[pick(rng)];
    const PromElement& b = sample_ball[pick(rng)];
    const PromElement& c = sample_ball[pick(rng)];
    const PromElement& d = sample_ball[pick(rng)];
    const PromElement& h = sample_ball[pick(rng)];
    check_triple(rv, ra, a, b, c);
    check_invariance(ri, h, a, b, c);
    check_cocycle(rc, a, b, c, d);
  }
  for (const Check* c : {&rv, &ra, &ri, &rc}) out.push_back(c->result());

  Check ab("abelianization onto Z/4 x Z/4");
  for (std::string_view r : {kRelator1, kRelator2})
    ab.expect(abelianization_image(evaluate(r)) == std::pair<int, int>{0, 0}, [&] { return std::string(r); });
  const std::vector<PromElement> b3 = ball(3);
  for (const PromElement& x : b3)
    for (const PromElement& y : b3) {
      const auto ix = abelianization_image(x), iy = abelianization_image(y);
      ab.expect(abelianization_image(prom_mul(x, y)) ==
                    std::pair<int, int>{(ix.first + iy.first) % 4, (ix.second + iy.second) % 4},
                [&] { return format(x) + " * " + format(y); });
    }
  std::set<std::pair<int, int>> image;
  for (const auto& [x, word] : ball_with_words(5)) {
    int ea = 0, eb = 0;
    for (char c : word) {
      ea += c == 'a' ? 1 : c == 'A' ? -1 : 0;
      eb += c == 'b' ? 1 : c == 'B' ? -1 : 0;
    }
    const std::pair<int, int> sums{static_cast<int>(mod4(ea)), static_cast<int>(mod4(eb))};
    ab.expect(abelianization_image(x) == sums, [&] { return word; });
    image.insert(abelianization_image(x));
  }
  ab.expect(image.size() == 16, [&] { return "image has " + std::to_string(image.size()) + " elements"; });
  out.push_back(ab.result());
  return out;
}

}  // namespace circord
