// Acceptance run: one PASS/FAIL line per criterion with its runtime budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "circord/cohomology.hpp"
#include "circord/extensions.hpp"
#include "circord/obstruction.hpp"
#include "circord/orders.hpp"
#include "circord/promislow.hpp"
#include "circord/snf.hpp"
#include "test_groups.hpp"

using namespace circord;
using namespace circord::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

bool valid_inhom(const FiniteGroup& g, const Cochain2& f) { return !check_inhom(g, f).has_value(); }
bool valid_hom(const FiniteGroup& g, const TripleTable& c) { return !check_hom(g, c).has_value(); }

void roundtrips(Outcome& o) {
  long long n = 0;
  for (const FiniteGroup& g : small_group_library()) {
    for (const Arrangement& a : enumerate_circular_orders(g)) {
      const HomCircularOrder c = arrangement_to_hom(g, a);
      const InhomCircularOrder f = hom_to_inhom(c);
      const HomCircularOrder c2 = inhom_to_hom(f);
      o.require(valid_inhom(g, f.cochain()) && valid_hom(g, c2.values()), g.name() + ": converted object invalid");
      o.require(c2 == c, g.name() + ": c^(f^(c)) != c");
      o.require(hom_to_inhom(c2) == f, g.name() + ": f^(c^(f)) != f");
      ++n;
    }
  }
  o.note << n << " orderings";
}

void enumeration(Outcome& o) {
  for (int n = 2; n <= 12; ++n) {
    const auto count = static_cast<long long>(enumerate_circular_orders(cyclic_group(n)).size());
    o.require(count == euler_phi(n), "Z/" + std::to_string(n) + " count " + std::to_string(count));
  }
  for (const FiniteGroup& g : {elementary(2, 2), elementary(3, 2), symmetric3()})
    o.require(enumerate_circular_orders(g).empty(), g.name() + " has an ordering");
  if (o.ok) o.note << "phi(n) for n <= 12; V4, Z3^2, S3 empty";
}

// Whether Z/k has an ordering whose class is n-divisible.
bool divisibility_verdict(const BarComplex& bc, long long n) {
  const FiniteGroup& g = bc.group();
  for (const Arrangement& a : enumerate_circular_orders(g))
    if (n_divisibility(bc, arrangement_to_inhom(g, a).cochain(), n).divisible) return true;
  return false;
}

void three_way(Outcome& o) {
  int searches = 0;
  for (int k = 2; k <= 8; ++k) {
    const BarComplex bc(cyclic_group(k));
    for (int n = 2; n <= 8; ++n) {
      const bool by_class = divisibility_verdict(bc, n);
      const bool by_gcd = gcd_ll(k, n) == 1;
      const FiniteGroup p = zk_times_zn(k, n);
      bool direct;
      if (k * n <= 12) {
        direct = !enumerate_circular_orders(p).empty();
        ++searches;
      } else {
        direct = is_cyclic(p);
      }
      o.require(by_class == by_gcd && by_gcd == direct,
                "disagreement at k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  if (o.ok) o.note << "49 pairs, " << searches << " direct searches";
}

void exact_sequence(Outcome& o) {
  long long verified = 0;
  for (int k = 2; k <= 8; ++k) {
    const FiniteGroup g = cyclic_group(k);
    const BarComplex bc(g);
    for (const Arrangement& a : enumerate_circular_orders(g)) {
      const Cochain2 f = arrangement_to_inhom(g, a).cochain();
      for (long long n = 2; n <= 8; ++n) {
        const ModTrivialityResult t = trivial_mod_n(bc, f, n);
        const DivisibilityResult d = n_divisibility(bc, f, n);
        o.require(t.trivial == d.divisible, "disagreement at k=" + std::to_string(k) + " n=" + std::to_string(n));
        if (t.trivial) {
          for (Element x = 1; x < k; ++x)
            for (Element y = 1; y < k; ++y) {
              const Integer du = bc.value(*t.u, y) - bc.value(*t.u, g.mul(x, y)) + bc.value(*t.u, x);
              o.require(mod_floor(Integer(f(x, y)) - du, Integer(n)).is_zero(), "mod-n witness fails");
            }
          ++verified;
        }
        if (d.divisible) {
          for (Element x = 1; x < k; ++x)
            for (Element y = 1; y < k; ++y) {
              const Integer rhs = Integer(n) * bc.value(*d.mu, x, y) + bc.value(*d.u, y) -
                                  bc.value(*d.u, g.mul(x, y)) + bc.value(*d.u, x);
              o.require(rhs == Integer(f(x, y)), "divisibility witness fails");
            }
          ++verified;
        }
      }
    }
  }
  if (o.ok) o.note << verified << " witnesses substituted";
}

// Independent invariant factors of coker d1 over long long, built straight
// from the group table: repeated gcd elimination on the first nonzero entry.
std::vector<long long> torsion_of_coker_d1(const FiniteGroup& g) {
  const int m = g.order() - 1;
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(m * m), std::vector<long long>(m, 0));
  for (Element x = 1; x <= m; ++x)
    for (Element y = 1; y <= m; ++y) {
      auto& row = a[(x - 1) * m + (y - 1)];
      row[y - 1] += 1;
      row[x - 1] += 1;
      if (g.mul(x, y) != 0) row[g.mul(x, y) - 1] -= 1;
    }
  const int rows = m * m, cols = m;
  std::vector<long long> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    bool exhausted = false;
    for (;;) {
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr < 0 || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) pr = i, pc = j;
      if (pr < 0) {
        exhausted = true;
        break;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        const long long q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (int j = t + 1; j < cols; ++j) {
        const long long q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      bool divides_all = true;
      for (int i = t + 1; i < rows && divides_all; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (exhausted) break;
    diag.push_back(std::llabs(a[t][t]));
  }
  std::vector<long long> out;
  for (long long d : diag)
    if (d > 1) out.push_back(d);
  return out;
}

void cohomology(Outcome& o) {
  auto factors = [](const FiniteGroup& g) {
    const H2Structure h = h2_structure(g, Coefficients::integers());
    std::vector<long long> v;
    for (const Integer& x : h.invariant_factors()) v.push_back(x.to_int64());
    return v;
  };
  for (int k = 1; k <= 8; ++k) {
    const FiniteGroup g = cyclic_group(k);
    const std::vector<long long> expect = k == 1 ? std::vector<long long>{} : std::vector<long long>{k};
    o.require(factors(g) == expect && torsion_of_coker_d1(g) == expect, "H^2(Z/" + std::to_string(k) + ")");
  }
  const FiniteGroup v4 = elementary(2, 2);
  o.require(factors(v4) == std::vector<long long>{2, 2} && torsion_of_coker_d1(v4) == std::vector<long long>{2, 2},
            "H^2(V4)");

  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> dim(1, 50), val(-9, 9);
  std::bernoulli_distribution zero(0.7);
  for (int t = 0; t < 100; ++t) {
    IntMatrix m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = zero(rng) ? Integer(0) : Integer(val(rng));
    SnfOptions opts;
    opts.inverses = true;
    const SnfResult<Integer> s = smith_normal_form(m, opts);
    bool ok = s.U * m * s.V == s.diagonal();
    // Integral two-sided inverses force determinant +-1.
    ok = ok && s.U * s.U_inv == IntMatrix::Identity(m.rows(), m.rows()) &&
         s.V * s.V_inv == IntMatrix::Identity(m.cols(), m.cols());
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) ok = ok && divides(s.factors[i], s.factors[i + 1]);
    o.require(ok, "SNF postcondition failed on random matrix " + std::to_string(t));
  }
  if (o.ok) o.note << "H^2 checks and 100 random SNFs";
}

void extensions(Outcome& o) {
  long long cases = 0;
  for (int k = 1; k <= 8; ++k) {
    const FiniteGroup g = cyclic_group(k);
    for (const Arrangement& arr : enumerate_circular_orders(g)) {
      const InhomCircularOrder f = arrangement_to_inhom(g, arr);
      const std::string tag = "Z/" + std::to_string(k) + " " + std::to_string(arr.size() > 1 ? arr[1] : 0);

      // Generation: the least positive element is (0, z) with z the minimal
      // generator ((1, id) for the trivial group), and its powers cover every
      // (a, g) with |a| <= 2.
      const CentralExtension e = CentralExtension::build(g, f.cochain(), Coefficients::integers());
      std::vector<Element> all(static_cast<std::size_t>(k));
      std::iota(all.begin(), all.end(), 0);
      const ExtElement x = least_positive_over(e, all);
      const Element z = minimal_generator(g, f);
      o.require(k == 1 ? x == e.iota(1) : x == e.make(0, z), tag + ": least positive element");
      std::set<std::pair<long long, int>> seen;
      for (long long t = -3 * k - 3; t <= 3 * k + 3; ++t) {
        const ExtElement p = e.pow(x, t);
        seen.insert({p.a.to_int64(), p.g});
      }
      for (long long a = -2; a <= 2; ++a)
        for (Element h = 0; h < k; ++h) o.require(seen.count({a, h}) == 1, tag + ": not generated");

      for (int n = 2; n * k <= 24; ++n) {
        const InhomCircularOrder hat = hat_ordering(g, f, n);
        o.require(valid_inhom(hat.group(), hat.cochain()), tag + ": hat ordering invalid");
        const ExtensionQuotient q = quotient_by_power(g, f, n);
        o.require(find_isomorphism(q.group, hat.group()).has_value(), tag + ": no isomorphism");
        // The relabeling (a, g) -> a |G| + g carries one ordering onto the other.
        std::vector<Element> phi;
        for (const ExtElement& r : q.representatives) phi.push_back(static_cast<Element>(r.a.to_int64() * k + r.g));
        const int m = q.group.order();
        o.require(m == hat.group().order(), tag + ": orders differ");
        for (Element i = 0; i < m && o.ok; ++i)
          for (Element j = 0; j < m; ++j) {
            o.require(phi[q.group.mul(i, j)] == hat.group().mul(phi[i], phi[j]), tag + ": relabeling not a hom");
            o.require(q.order(i, j) == hat(phi[i], phi[j]), tag + ": orderings differ");
          }
        ++cases;
      }

      for (const auto& sub : all_subgroups(g)) {
        if (sub.size() < 2) continue;
        const CentralQuotient cq = quotient_by_cyclic_central(g, f, sub);
        const FiniteGroup& h = cq.quotient.group;
        o.require(valid_inhom(h, cq.fbar.cochain()), tag + ": fbar invalid");
        for (Element a = 0; a < h.order(); ++a)
          for (Element b = 0; b < h.order(); ++b) {
            const Element kk = g.mul(g.mul(cq.nu.images[a], cq.nu.images[b]), g.inv(cq.nu.images[h.mul(a, b)]));
            const long long r = ((cq.fbar(a, b) % cq.n) + cq.n) % cq.n;
            o.require(g.pow(cq.z, r) == kk, tag + ": p_n fbar != f_nu");
          }
        ++cases;
      }
    }
  }
  if (o.ok) o.note << cases << " constructions";
}

void promislow(Outcome& o) {
  long long cases = 0;
  for (const CheckResult& c : promislow_demo()) {
    o.require(c.passed, c.name + ": " + c.detail);
    cases += c.cases;
  }
  if (o.ok) o.note << cases << " cases, seed " << kDefaultSeed;
}

void obstruction(Outcome& o) {
  for (int k = 2; k <= 12; ++k)
    o.require(spectrum_finite(cyclic_group(k)).minimal() == prime_divisors(k), "Ob(Z/" + std::to_string(k) + ")");
  for (long long e = 2; e <= 8; ++e) {
    const ObstructionSpectrum s = spectrum_finite(cyclic_group(static_cast<int>(e)));
    bool prime = true;
    for (long long d = 2; d * d <= e; ++d) prime = prime && e % d != 0;
    for (long long n = 2; n <= 8; ++n) {
      const ExponentFacts f = exponent_facts(e, n, false);
      const std::string at = "(" + std::to_string(e) + "," + std::to_string(n) + ")";
      if (prime) {
        o.require(f.verdict == ExponentVerdict::SpectrumIsMultiples && f.member == (n % e == 0), at);
      } else if (gcd_ll(e, n) == 1) {
        o.require(f.verdict == ExponentVerdict::NotInSpectrum && f.member == false, at);
      } else if (n == e) {
        o.require(f.verdict == ExponentVerdict::InSpectrum && f.member == true, at);
      } else {
        o.require(f.verdict == ExponentVerdict::Undetermined && !f.member, at);
      }
      if (f.member) o.require(*f.member == s.contains(n), at + " contradicts Ob(Z/e)");
    }
  }
  const ObstructionSpectrum p = promislow_spectrum();
  o.require(!p.contains(2) && p.contains(4) && p.contains(8) && p.contains(12), "Promislow spectrum");
  if (o.ok) o.note << "spectra, 49 verdicts, 4N";
}

struct Criterion {
  const char* name;
  double budget;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"conversion round trips", 5, roundtrips},
      {"enumeration oracle", 10, enumeration},
      {"product three-way agreement", 30, three_way},
      {"mod-n triviality vs divisibility", 30, exact_sequence},
      {"cohomology engine and SNF", 10, cohomology},
      {"extension constructions", 60, extensions},
      {"Promislow demo", 60, promislow},
      {"obstruction facts", 5, obstruction},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs < criteria[i].budget;
    if (!pass) ++failures;
    std::printf("%s %zu %-34s %7.2fs / %3.0fs  %s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                criteria[i].budget, o.note.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
