#pragma once

// Cross-module consistency sweep: every closed formula is checked against
// an independent computation over a parameter grid.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "detloci/blowup_tower.hpp"
#include "detloci/brill_noether.hpp"
#include "detloci/determinantal.hpp"
#include "detloci/invariants.hpp"
#include "detloci/jump_ideals.hpp"
#include "detloci/petri.hpp"
#include "detloci/random.hpp"

namespace detloci {

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few failure descriptions

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failed;
    if (failures.size() < 5) failures.push_back(what);
  }
  bool passed() const { return failed == 0; }
};

struct SweepOptions {
  int max_size = 6;
  std::uint64_t seed = 0;
  std::size_t complexes = 20;
  std::size_t points = 20;
  std::size_t pairs = 10;
  std::function<Rational(int, int, int)> lct_formula = [](int a, int b, int k) { return lct(a, b, k); };
};

struct SweepSummary {
  SweepOptions options;
  std::vector<SuiteResult> suites;
  bool passed() const {
    for (const auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }
};

inline std::string triple(int a, int b, int k) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + ")";
}

inline SuiteResult suite_lct_vs_tower(int max_size, const std::function<Rational(int, int, int)>& formula) {
  SuiteResult r{"lct-vs-tower"};
  for (int b = 1; b <= max_size; ++b)
    for (int a = 1; a <= b; ++a)
      for (int k = 1; k <= a; ++k) {
        auto tower = lct_from_tower(resolve_tower(a, b, k));
        auto closed = formula(a, b, k);
        r.record(tower == closed, triple(a, b, k) + ": tower " + tower.to_string() + " vs formula " + closed.to_string());
      }
  return r;
}

inline SuiteResult suite_zeta_vs_tower(int max_size, const std::function<Rational(int, int, int)>& formula) {
  SuiteResult r{"zeta-vs-tower"};
  for (int a = 1; a <= max_size; ++a)
    for (int k = 1; k <= a; ++k) {
      auto tower = zeta_poles_from_tower(resolve_tower(a, a, k));
      auto closed = top_zeta_det(a, k).poles;
      r.record(tower == closed, triple(a, a, k) + ": tower poles differ from the closed pole set");
      // the pole closest to zero sits at -lct
      auto l = formula(a, a, k);
      bool bounded = true, attained = false;
      for (const auto& p : closed) {
        bounded = bounded && !(-p < l);
        attained = attained || -p == l;
      }
      r.record(bounded && attained, triple(a, a, k) + ": poles do not attain -lct = -" + l.to_string());
    }
  return r;
}

inline SuiteResult suite_bfunction_vs_lct(int max_size, const std::function<Rational(int, int, int)>& formula) {
  SuiteResult r{"bfunction-vs-lct"};
  for (int b = 1; b <= max_size; ++b)
    for (int a = 1; a <= b; ++a) {
      auto bf = b_function_det(a, b);
      Rational smallest = -bf.roots.front();
      for (const auto& root : bf.roots)
        if (-root < smallest) smallest = -root;
      auto l = formula(a, b, 1);
      r.record(smallest == l && l == Rational(b - a + 1),
               triple(a, b, 1) + ": smallest root " + smallest.to_string() + " vs lct " + l.to_string());
    }
  return r;
}

inline SuiteResult suite_monodromy(int max_size) {
  SuiteResult r{"monodromy"};
  for (int a = 1; a <= max_size; ++a) {
    auto c = monodromy_check(a);
    r.record(c.passed && c.matches.size() == static_cast<std::size_t>(a),
             "a=" + std::to_string(a) + ": certificate failed" +
                 (c.offending_pole ? " at pole " + c.offending_pole->to_string() : std::string()));
  }
  return r;
}

inline SuiteResult suite_point_count(int max_size) {
  SuiteResult r{"point-count"};
  for (int b = 1; b <= max_size; ++b)
    for (int a = 1; a <= b && a * b <= 9; ++a)
      for (long q : {2L, 3L})
        for (int rk = 0; rk <= a; ++rk) {
          GenericShape shape(a, b);
          auto closed = count_points_rank_le(shape, rk, q);
          auto brute = count_points_brute_force(shape, rk, q);
          r.record(closed == brute, triple(a, b, rk) + " q=" + std::to_string(q) + ": " + closed.str() + " vs brute " +
                                        brute.str());
        }
  for (int b = 1; b <= std::min(max_size, 4); ++b)
    for (int a = 1; a <= b; ++a)
      for (int k = 1; k <= a; ++k) {
        GenericShape shape(a, b);
        int degree = polynomial_degree(rank_count_polynomial(shape, a - k));
        r.record(degree == stratum_dimension(shape, k), triple(a, b, k) + ": count polynomial degree " +
                                                           std::to_string(degree));
      }
  return r;
}

template <ScalarField K>
void check_complex(SuiteResult& r, Rng& rng, const typename K::Context& ctx, std::size_t points, std::size_t index) {
  auto c = random_complex<K>(rng, ctx);
  auto pts = random_points<K>(rng, c.ring()->nvars(), points, ctx);
  std::string tag = "complex #" + std::to_string(index);
  r.record(validate_complex(c).valid, tag + ": generated complex has d^2 != 0");
  for (int i = c.min_degree() - 1; i <= c.max_degree() + 1; ++i) {
    std::vector<bool> previous;
    for (int k = 1; k <= static_cast<int>(c.rank(i)) + 1; ++k) {
      auto rep = specialization_check(c, i, k, pts);
      r.record(rep.consistent(), tag + " i=" + std::to_string(i) + " k=" + std::to_string(k) + ": " +
                                     std::to_string(rep.violations.size()) + " violations");
      // nesting: V(J_{k+1}) inside V(J_k)
      auto ideal = jump_ideal(c, i, k);
      std::vector<bool> vanish;
      for (const auto& p : pts) {
        bool v = true;
        for (const auto& g : ideal.generators) v = v && g.evaluate(p).is_zero();
        vanish.push_back(v);
      }
      bool nested = true;
      for (std::size_t t = 0; t < previous.size(); ++t) nested = nested && (!vanish[t] || previous[t]);
      r.record(nested, tag + " i=" + std::to_string(i) + " k=" + std::to_string(k) + ": jump loci not nested");
      previous = std::move(vanish);
    }
  }
}

inline SuiteResult suite_jump_specialization(std::uint64_t seed, std::size_t complexes, std::size_t points) {
  SuiteResult r{"jump-specialization"};
  Rng rng(seed);
  for (std::size_t n = 0; n < complexes; ++n) {
    if (n % 2 == 0)
      check_complex<Rational>(r, rng, RationalContext{}, points, n);
    else
      check_complex<Fp>(r, rng, prime_context(), points, n);
  }
  return r;
}

template <ScalarField K>
void check_pair(SuiteResult& r, Rng& rng, const typename K::Context& ctx, std::size_t index) {
  TruncationOrder order(4);
  std::string tag = "pair #" + std::to_string(index);
  auto d = random_pair<K>(rng, ctx);
  for (int k = 1; k <= static_cast<int>(d.l()); ++k) {
    auto cert = verify_tangent_cone_equiv(d, k, order);
    r.record(cert.passed(), tag + " k=" + std::to_string(k) + ": tangent cone certificate failed");
  }
  // the same data with the higher maps removed
  LInfPairData<K> flat(d.s(), d.l(), d.lp(), {d.maps().front()}, ctx);
  auto u = universal_matrix(flat, order);
  r.record(u.matrix == flat.petri().matrix(u.matrix.ring()), tag + ": universal matrix differs from B");
  auto cert = verify_tangent_cone_equiv(flat, 1, order);
  r.record(cert.passed() && cert.identity_straightening(), tag + ": straightening is not the identity");
}

inline SuiteResult suite_universal_matrix(std::uint64_t seed, std::size_t pairs) {
  SuiteResult r{"universal-matrix"};
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t n = 0; n < pairs; ++n) {
    if (n % 2 == 0)
      check_pair<Rational>(r, rng, RationalContext{}, n);
    else
      check_pair<Fp>(r, rng, prime_context(), n);
  }
  return r;
}

inline SuiteResult suite_brill_noether() {
  SuiteResult r{"brill-noether"};
  for (long g = 2; g <= 8; ++g)
    for (long n = 1; n <= 3; ++n)
      for (long deg_f = -3; deg_f <= 3; ++deg_f)
        for (long rank_f = 1; rank_f <= 2; ++rank_f)
          for (int l = 1; l <= 4; ++l)
            for (int k = 1; k <= l; ++k)
              for (long d = 0; d <= 2 * n * (g - 1); ++d) {
                BNContext c(g, n, d, deg_f, rank_f, k, l);
                std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                  " degF=" + std::to_string(deg_f) + " rankF=" + std::to_string(rank_f) +
                                  " k=" + std::to_string(k) + " l=" + std::to_string(l);
                long ch = chi(c);
                r.record(rho(c) == n * n * (g - 1) + 1 - static_cast<long>(k) * (k - ch), tag + ": rho identity");
                if (n == 1 && deg_f == 0 && rank_f == 1)
                  r.record(rho(c) == classical_bn_number(g, d, k), tag + ": classical Brill-Noether number");
                if (l_prime(c) >= l)
                  r.record(to_determinantal(c).codimension ==
                               static_cast<long>(l) * l_prime(c) - static_cast<long>(l - k) * (l_prime(c) + k),
                           tag + ": codimension identity");
              }
  return r;
}

inline SweepSummary consistency_sweep(const SweepOptions& o) {
  if (o.max_size < 1 || o.max_size > 8) throw InputError("sweep size must be in 1..8, got " + std::to_string(o.max_size));
  SweepSummary s{o, {}};
  s.suites.push_back(suite_lct_vs_tower(o.max_size, o.lct_formula));
  s.suites.push_back(suite_zeta_vs_tower(o.max_size, o.lct_formula));
  s.suites.push_back(suite_bfunction_vs_lct(o.max_size, o.lct_formula));
  s.suites.push_back(suite_monodromy(o.max_size));
  s.suites.push_back(suite_point_count(o.max_size));
  s.suites.push_back(suite_jump_specialization(o.seed, o.complexes, o.points));
  s.suites.push_back(suite_universal_matrix(o.seed, o.pairs));
  s.suites.push_back(suite_brill_noether());
  return s;
}

}  // namespace detloci
