#pragma once

// Closed-form singularity invariants of the generic determinantal varieties
// M_k(a, b) = {b x a matrices of rank <= a-k}, 1 <= k <= a <= b.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "detloci/determinantal.hpp"
#include "detloci/error.hpp"
#include "detloci/scalar.hpp"

namespace detloci {

/// Requires 1 <= k <= a <= b (no transposition: callers pass the normalized shape).
inline void require_triple(int a, int b, int k) {
  if (a < 1 || a > b)
    throw InputError("need 1 <= a <= b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  if (k < 1 || k > a) throw InputError("need 1 <= k <= a, got k=" + std::to_string(k) + " a=" + std::to_string(a));
}

inline void require_square(int a, int b, const std::string& what) {
  if (a != b) throw InputError(what + " requires a=b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
}

/// lct(A^{ab}, M_k) = min_{i=0..a-k} (a-i)(b-i) / (a-k+1-i).
inline Rational lct(int a, int b, int k) {
  require_triple(a, b, k);
  std::optional<Rational> best;
  for (int i = 0; i <= a - k; ++i) {
    Rational v(static_cast<long>(a - i) * (b - i), a - k + 1 - i);
    if (!best || v < *best) best = v;
  }
  return *best;
}

/// Bernstein-Sato polynomial of J_1: prod_{i=b-a+1}^{b} (s+i).
struct BFunction {
  std::vector<Rational> roots;  // -(b-a+1), ..., -b: smallest magnitude first

  /// Coefficients of b(s), constant term first.
  std::vector<Rational> coefficients() const {
    std::vector<Rational> c{Rational(1)};
    for (const auto& r : roots) {
      std::vector<Rational> next(c.size() + 1, Rational(0));
      for (std::size_t d = 0; d < c.size(); ++d) {
        next[d + 1] += c[d];
        next[d] -= c[d] * r;
      }
      c = std::move(next);
    }
    return c;
  }
  bool has_root(const Rational& r) const { return std::find(roots.begin(), roots.end(), r) != roots.end(); }
};

inline BFunction b_function_det(int a, int b) {
  require_triple(a, b, 1);
  BFunction f;
  for (int i = b - a + 1; i <= b; ++i) f.roots.emplace_back(-i);
  return f;
}

/// Topological zeta function prod_{alpha in poles} 1/(1 - s/alpha); poles are
/// simple and stored without repetition, closest to zero first.
struct ZetaFunction {
  std::vector<Rational> poles;
};

inline void sort_poles(std::vector<Rational>& poles) {
  std::sort(poles.begin(), poles.end(), std::greater<>{});
  poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
}

/// Square case: poles {-(a-i)^2 / (a-k+1-i) : i = 0..a-k}.
inline ZetaFunction top_zeta_det(int a, int b, int k) {
  require_square(a, b, "zeta formula");
  require_triple(a, b, k);
  ZetaFunction z;
  for (int i = 0; i <= a - k; ++i) z.poles.emplace_back(-static_cast<long>(a - i) * (a - i), a - k + 1 - i);
  sort_poles(z.poles);
  return z;
}
inline ZetaFunction top_zeta_det(int a, int k) { return top_zeta_det(a, a, k); }

struct StratumRow {
  int t;          // stratum M_t \ M_{t+1}
  long dimension;  // dim M_t
};

struct EulerObstruction {
  BigInt value;                 // binom(a, a-k)
  std::vector<StratumRow> strata;  // Whitney strata of M_k: t = k..a
};

inline EulerObstruction euler_obstruction(int a, int b, int k) {
  require_triple(a, b, k);
  EulerObstruction e{binomial(a, a - k), {}};
  GenericShape shape(a, b);
  for (int t = k; t <= a; ++t) e.strata.push_back({t, stratum_dimension(shape, t)});
  return e;
}

enum class MldTarget { AlongNextStratum, PointOnStratum };

/// Minimal log discrepancy of M_k (square case): along M_{k+1} it is k+1; at
/// a point of M_{k'} \ M_{k'+1}, k <= k' <= a, it is a^2 - k k'.
inline long mld(int a, int b, int k, MldTarget target, std::optional<int> k_prime = std::nullopt) {
  require_square(a, b, "mld formula");
  require_triple(a, b, k);
  if (target == MldTarget::AlongNextStratum) return k + 1;
  if (!k_prime) throw InputError("mld at a point needs the stratum index k'");
  if (*k_prime < k || *k_prime > a)
    throw InputError("need k <= k' <= a, got k=" + std::to_string(k) + " k'=" + std::to_string(*k_prime));
  return static_cast<long>(a) * a - static_cast<long>(k) * *k_prime;
}

struct PoleMatch {
  Rational pole;
  std::optional<Rational> root;  // empty when the pole is not a b-function root
};

/// Monodromy conjecture instance for the square case, k = 1: every zeta pole
/// must be a root of b(s). b(s) Z(s) is then a polynomial.
struct MonodromyCertificate {
  int a;
  BFunction bfunction;
  ZetaFunction zeta;
  std::vector<PoleMatch> matches;
  bool passed = false;
  std::optional<Rational> offending_pole;
  Rational constant_factor{1};           // prod of |pole| over matched poles
  std::vector<Rational> remaining_roots;  // roots of b(s) not cancelled by a pole

  /// b(s) Z(s) in factored form, e.g. "6" or "2*(s+3)".
  std::string product_string() const {
    std::string out = constant_factor.to_string();
    for (const auto& r : remaining_roots) {
      Rational shift = -r;
      out += "*(s+" + shift.to_string() + ")";
    }
    return out;
  }
};

inline MonodromyCertificate monodromy_check(int a, const BFunction& bfunction, const ZetaFunction& zeta) {
  MonodromyCertificate c{a, bfunction, zeta, {}, true, std::nullopt, Rational(1), {}};
  std::vector<Rational> remaining = bfunction.roots;
  for (const auto& pole : zeta.poles) {
    auto it = std::find(remaining.begin(), remaining.end(), pole);
    if (it == remaining.end()) {
      c.matches.push_back({pole, std::nullopt});
      if (c.passed) c.offending_pole = pole;
      c.passed = false;
      continue;
    }
    c.matches.push_back({pole, *it});
    // 1/(1 - s/alpha) = -alpha/(s - alpha); with alpha a root, (s - alpha) cancels
    c.constant_factor *= -pole;
    remaining.erase(it);
  }
  c.remaining_roots = std::move(remaining);
  return c;
}

inline MonodromyCertificate monodromy_check(int a) {
  if (a < 1) throw InputError("monodromy check needs a >= 1");
  return monodromy_check(a, b_function_det(a, a), top_zeta_det(a, 1));
}

}  // namespace detloci
