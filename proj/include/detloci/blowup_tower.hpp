#pragma once

// Divisor bookkeeping for the log resolution of M_k(a, b) obtained by
// blowing up the strict transforms of M_a, M_{a-1}, ..., M_k in turn.

#include <optional>
#include <vector>

#include "detloci/invariants.hpp"

namespace detloci {

struct DivisorRecord {
  int i;                 // 0..a-k, in blowup order
  int center_index;      // stratum a-i
  long center_codim;     // (a-i)(b-i)
  long multiplicity;     // N_i = a-k+1-i
  long log_discrepancy;  // A_i = (a-i)(b-i)
  bool log_discrepancy_derived = true;  // reconstructed, not read off the resolution

  Rational ratio() const { return Rational(log_discrepancy, multiplicity); }
};

struct TowerReport {
  int a, b, k;
  std::vector<DivisorRecord> records;
  Rational lct{0};
  std::optional<std::vector<Rational>> zeta_poles;  // square case only
};

/// min A_i / N_i over the divisors.
inline Rational lct_from_tower(const TowerReport& t) {
  std::optional<Rational> best;
  for (const auto& r : t.records)
    if (!best || r.ratio() < *best) best = r.ratio();
  if (!best) throw AlgebraError("tower has no divisors");
  return *best;
}

/// {-A_i / N_i}.
inline std::vector<Rational> zeta_poles_from_tower(const TowerReport& t) {
  require_square(t.a, t.b, "zeta formula");
  std::vector<Rational> poles;
  for (const auto& r : t.records) poles.push_back(-r.ratio());
  sort_poles(poles);
  return poles;
}

inline TowerReport resolve_tower(int a, int b, int k) {
  require_triple(a, b, k);
  TowerReport t{a, b, k, {}, Rational(0), std::nullopt};
  for (int i = 0; i <= a - k; ++i) {
    long codim = static_cast<long>(a - i) * (b - i);
    t.records.push_back({i, a - i, codim, a - k + 1 - i, codim, true});
  }
  t.lct = lct_from_tower(t);
  if (a == b) t.zeta_poles = zeta_poles_from_tower(t);
  return t;
}

}  // namespace detloci
