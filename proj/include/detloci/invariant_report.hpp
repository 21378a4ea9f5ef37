#pragma once

// The full invariant report for a triple (a, b, k), with internal
// cross-checks run before the report is handed out.

#include <optional>
#include <string>
#include <vector>

#include "detloci/blowup_tower.hpp"
#include "detloci/determinantal.hpp"
#include "detloci/error.hpp"
#include "detloci/invariants.hpp"

namespace detloci {

struct MldData {
  long along_next_stratum;          // mld(M_{k+1}; M_k)
  bool next_stratum_empty;          // k = a
  std::vector<std::pair<int, long>> at_points;  // (k', mld at a point of M_{k'} \ M_{k'+1})
};

struct InvariantReport {
  int a, b, k;
  long dimension;
  long codimension;
  SingularLocus singular_locus;
  Rational lct;
  std::optional<BFunction> bfunction;  // k = 1
  std::optional<ZetaFunction> zeta;    // a = b
  EulerObstruction euler;
  std::optional<MldData> mld;          // a = b
  std::optional<MonodromyCertificate> monodromy;  // a = b, k = 1
  std::vector<std::string> checks;     // names of the cross-checks that ran
};

inline InvariantReport invariant_report(int a, int b, int k) {
  require_triple(a, b, k);
  GenericShape shape(a, b);
  InvariantReport r{a,
                    b,
                    k,
                    stratum_dimension(shape, k),
                    stratum_codimension(shape, k),
                    singular_locus_index(shape, k),
                    lct(a, b, k),
                    std::nullopt,
                    std::nullopt,
                    euler_obstruction(a, b, k),
                    std::nullopt,
                    std::nullopt,
                    {}};
  auto fail = [&](const std::string& what) {
    throw AlgebraError("invariant cross-check failed for (" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(k) + "): " + what);
  };

  auto tower = resolve_tower(a, b, k);
  if (!(tower.lct == r.lct)) fail("tower lct " + tower.lct.to_string() + " != " + r.lct.to_string());
  r.checks.emplace_back("lct = min A_i/N_i over the blowup tower");

  if (k == 1) {
    r.bfunction = b_function_det(a, b);
    if (!(-r.bfunction->roots.front() == r.lct)) fail("lct is not the smallest-magnitude b-function root");
    r.checks.emplace_back("lct = smallest-magnitude b-function root");
  }

  if (a == b) {
    r.zeta = top_zeta_det(a, k);
    if (!(tower.zeta_poles && *tower.zeta_poles == r.zeta->poles)) fail("tower zeta poles differ");
    r.checks.emplace_back("zeta poles = {-A_i/N_i} over the blowup tower");
    bool attained = false;
    for (const auto& p : r.zeta->poles) {
      if (-p < r.lct) fail("zeta pole " + p.to_string() + " below lct");
      attained = attained || -p == r.lct;
    }
    if (!attained) fail("no zeta pole attains lct");
    r.checks.emplace_back("pole nearest zero = -lct");

    MldData m{mld(a, b, k, MldTarget::AlongNextStratum), k == a, {}};
    for (int kp = k; kp <= a; ++kp) m.at_points.emplace_back(kp, mld(a, b, k, MldTarget::PointOnStratum, kp));
    if (m.at_points.front().second != r.dimension) fail("mld at a smooth point differs from dimension");
    r.checks.emplace_back("mld at the open stratum = dim M_k");
    r.mld = std::move(m);

    if (k == 1) {
      r.monodromy = monodromy_check(a, *r.bfunction, *r.zeta);
      if (!r.monodromy->passed) fail("monodromy certificate failed at pole " + r.monodromy->offending_pole->to_string());
      r.checks.emplace_back("zeta poles are b-function roots");
    }
  }

  if (k == a && r.euler.value != 1) fail("Euler obstruction at a smooth point is not 1");
  return r;
}

}  // namespace detloci
