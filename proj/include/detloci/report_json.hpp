#pragma once

// JSON views of the reports produced by each module.

#include <string>

#include "detloci/blowup_tower.hpp"
#include "detloci/brill_noether.hpp"
#include "detloci/consistency.hpp"
#include "detloci/invariant_report.hpp"
#include "detloci/json_io.hpp"

namespace detloci {

inline Json monodromy_json(const MonodromyCertificate& c) {
  Json pairs = Json::array();
  for (const auto& m : c.matches)
    pairs.push_back(Json{{"pole", m.pole.to_string()}, {"root", m.root ? Json(m.root->to_string()) : Json(nullptr)}});
  Json j{{"a", c.a},
         {"status", c.passed ? "PASS" : "FAILED"},
         {"bfunctionRoots", rationals_json(c.bfunction.roots)},
         {"zetaPoles", rationals_json(c.zeta.poles)},
         {"matches", pairs},
         {"matchedPairs", c.passed ? c.matches.size() : 0}};
  if (c.offending_pole) j["offendingPole"] = c.offending_pole->to_string();
  if (c.passed) j["bTimesZeta"] = c.product_string();
  return j;
}

inline Json tower_json(const TowerReport& t) {
  Json records = Json::array();
  for (const auto& r : t.records)
    records.push_back(Json{{"i", r.i},
                           {"centerIndex", r.center_index},
                           {"centerCodim", r.center_codim},
                           {"multiplicity", r.multiplicity},
                           {"logDiscrepancy", r.log_discrepancy},
                           {"logDiscrepancyDerived", r.log_discrepancy_derived}});
  Json j{{"shape", {{"a", t.a}, {"b", t.b}, {"k", t.k}}}, {"divisors", records}, {"lct", t.lct.to_string()}};
  j["zetaPoles"] = t.zeta_poles ? rationals_json(*t.zeta_poles) : Json(nullptr);
  j["notes"] = Json::array({"log discrepancies A_i = (a-i)(b-i) are derived: they are forced by the lct and the "
                            "zeta pole set, not read off the resolution"});
  return j;
}

inline Json invariant_json(const InvariantReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.euler.strata) strata.push_back(Json{{"t", s.t}, {"dimension", s.dimension}});
  Json j{{"shape", {{"a", r.a}, {"b", r.b}, {"k", r.k}}},
         {"dimension", r.dimension},
         {"codimension", r.codimension},
         {"singularLocus", {{"index", r.singular_locus.index}, {"empty", r.singular_locus.empty}}},
         {"lct", r.lct.to_string()}};
  j["bfunction"] = r.bfunction ? Json{{"roots", rationals_json(r.bfunction->roots)},
                                      {"coefficients", rationals_json(r.bfunction->coefficients())}}
                               : Json(nullptr);
  j["zeta"] = r.zeta ? Json{{"poles", rationals_json(r.zeta->poles)}} : Json(nullptr);
  j["eulerObstruction"] = big_json(r.euler.value);
  j["strata"] = strata;
  if (r.mld) {
    Json points = Json::array();
    for (const auto& [kp, v] : r.mld->at_points) points.push_back(Json{{"kPrime", kp}, {"mld", v}});
    j["mld"] = Json{{"alongNextStratum", r.mld->along_next_stratum},
                    {"nextStratumEmpty", r.mld->next_stratum_empty},
                    {"atPoints", points}};
  } else {
    j["mld"] = nullptr;
  }
  j["monodromy"] = r.monodromy ? monodromy_json(*r.monodromy) : Json(nullptr);
  j["checks"] = r.checks;
  return j;
}

inline Json bn_json(const BNReport& r) {
  const auto& c = r.context;
  Json j{{"context",
          {{"genus", c.g}, {"rank", c.n}, {"degree", c.d}, {"auxDegree", c.deg_f}, {"auxRank", c.rank_f}, {"k", c.k},
           {"h0", c.l}}},
         {"chi", r.chi},
         {"h1", r.l_prime},
         {"rho", r.rho},
         {"ambientDimension", r.ambient_dimension},
         {"model", {{"a", r.model.shape.a()}, {"b", r.model.shape.b()}, {"k", r.model.k}, {"codimension", r.model.codimension}}},
         {"invariants", invariant_json(r.invariants)}};
  if (r.invariants.zeta) j["zetaRelation"] = "subset";
  if (!r.zeta_note.empty()) j["zetaNote"] = r.zeta_note;
  j["singularLocus"] = r.singular_locus;
  j["assumptions"] = Json::array({r.petri_assumption});
  return j;
}

inline Json sweep_json(const SweepSummary& s) {
  Json suites = Json::array();
  std::size_t cases = 0, failed = 0;
  for (const auto& r : s.suites) {
    suites.push_back(Json{{"name", r.name},
                          {"cases", r.cases},
                          {"passed", r.cases - r.failed},
                          {"failed", r.failed},
                          {"status", r.passed() ? "PASS" : "FAIL"},
                          {"failures", r.failures}});
    cases += r.cases;
    failed += r.failed;
  }
  return Json{{"maxSize", s.options.max_size},
              {"seed", s.options.seed},
              {"complexes", s.options.complexes},
              {"points", s.options.points},
              {"pairs", s.options.pairs},
              {"suites", suites},
              {"totalCases", cases},
              {"totalFailed", failed},
              {"status", s.passed() ? "PASS" : "FAIL"}};
}

}  // namespace detloci
