// detloci command-line front end. Every subcommand builds one JSON result;
// --json prints it verbatim, otherwise a flattened key/value view is shown.
//
// Exit codes: 0 success, 1 failed certificate or algebraic precondition,
// 2 malformed input or unknown flag.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "detloci/detloci.hpp"

namespace {

using detloci::Json;

struct Globals {
  bool json = false;
  bool timestamp = false;
  std::string out;
  std::uint64_t seed = 0;
};

struct Outcome {
  Json parameters;
  Json result;
  bool ok = true;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw detloci::InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw detloci::InputError(path + ": " + e.what());
  }
}

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

template <class F>
auto with_field(const std::optional<detloci::PrimeContext>& prime, F&& f) {
  if (prime) return f(detloci::Fp(*prime, 0));
  return f(detloci::Rational(0));
}

// --- subcommands -----------------------------------------------------------

struct DetIdealArgs {
  int a = 0, b = 0, k = 0;
  std::uint64_t prime = 0;
};

Outcome det_ideal(const DetIdealArgs& p) {
  std::optional<detloci::PrimeContext> prime;
  if (p.prime) prime = detloci::prime_context(p.prime);
  return with_field(prime, [&](auto tag) {
    using K = decltype(tag);
    detloci::GenericShape shape(p.a, p.b);
    if (p.k < 1 || p.k > shape.a())
      throw detloci::InputError("k=" + std::to_string(p.k) + " out of range 1.." + std::to_string(shape.a()));
    auto ideal = detloci::determinantal_ideal<K>(shape, p.k, tag.context());
    auto ring = detloci::make_ring<K>(detloci::generic_variable_names(shape), tag.context());
    Json r{{"shape", {{"a", shape.a()}, {"b", shape.b()}}},
           {"k", p.k},
           {"minorSize", ideal.minor_size},
           {"vars", ring->vars},
           {"generatorCount", ideal.generators.size()},
           {"expectedCount", detloci::big_json(detloci::determinantal_generator_count(shape, p.k))},
           {"generators", detloci::polys_json(ideal.generators)}};
    detloci::add_prime<K>(r, tag.context());
    Json params{{"a", p.a}, {"b", p.b}, {"k", p.k}};
    if (p.prime) params["prime"] = p.prime;
    return Outcome{params, r, true};
  });
}

struct ShapeArgs {
  int a = 0, b = 0, k = 0;
};

Outcome det_invariants(const ShapeArgs& p) {
  return {Json{{"a", p.a}, {"b", p.b}, {"k", p.k}}, detloci::invariant_json(detloci::invariant_report(p.a, p.b, p.k)),
          true};
}

Outcome resolve(const ShapeArgs& p) {
  return {Json{{"a", p.a}, {"b", p.b}, {"k", p.k}}, detloci::tower_json(detloci::resolve_tower(p.a, p.b, p.k)), true};
}

Outcome mc_check(int a) {
  auto c = detloci::monodromy_check(a);
  return {Json{{"a", a}}, detloci::monodromy_json(c), c.passed};
}

struct CountArgs {
  int a = 0, b = 0, r = 0;
  long q = 0;
  bool brute = false;
};

Outcome count_points(const CountArgs& p) {
  detloci::GenericShape shape(p.a, p.b);
  auto closed = detloci::count_points_rank_le(shape, p.r, p.q);
  Json r{{"shape", {{"a", shape.a()}, {"b", shape.b()}}}, {"rankAtMost", p.r}, {"q", p.q}, {"count", closed.str()}};
  bool ok = true;
  if (p.brute) {
    auto brute = detloci::count_points_brute_force(shape, p.r, p.q);
    r["bruteForce"] = brute.str();
    r["agree"] = brute == closed;
    ok = brute == closed;
  }
  Json params{{"a", p.a}, {"b", p.b}, {"r", p.r}, {"q", p.q}, {"bruteForce", p.brute}};
  return {params, r, ok};
}

struct JumpArgs {
  std::string complex;
  int i = 0, k = 0;
  std::size_t check_points = 0;
};

Outcome jump_ideal(const JumpArgs& p, std::uint64_t seed) {
  auto doc = read_json_file(p.complex);
  return with_field(detloci::prime_of(doc), [&](auto tag) {
    using K = decltype(tag);
    auto c = detloci::complex_from_json<K>(doc, tag.context());
    auto ideal = detloci::jump_ideal(c, p.i, p.k);
    Json r{{"degree", p.i},
           {"k", p.k},
           {"rank", c.rank(p.i)},
           {"minorSize", ideal.minor_size},
           {"vars", c.ring()->vars},
           {"unitIdeal", ideal.is_unit()},
           {"zeroIdeal", ideal.is_zero()},
           {"generators", detloci::polys_json(ideal.generators)}};
    bool ok = true;
    if (p.check_points > 0) {
      detloci::Rng rng(seed);
      auto pts = detloci::random_points<K>(rng, c.ring()->nvars(), p.check_points, tag.context());
      auto rep = detloci::specialization_check(c, p.i, p.k, pts);
      Json violations = Json::array();
      for (const auto& v : rep.violations) {
        Json pt = Json::array();
        for (const auto& x : v.point) pt.push_back(x.to_string());
        violations.push_back(Json{{"point", pt}, {"cohomologyDimension", v.cohomology_dimension}, {"idealVanishes", v.ideal_vanishes}});
      }
      r["specialization"] = Json{{"seed", seed}, {"pointsChecked", rep.points_checked}, {"violations", violations},
                                 {"status", rep.consistent() ? "PASS" : "FAIL"}};
      ok = rep.consistent();
    }
    Json params{{"complex", p.complex}, {"i", p.i}, {"k", p.k}, {"checkPoints", p.check_points}};
    if (p.check_points > 0) params["seed"] = seed;
    return Outcome{params, r, ok};
  });
}

template <detloci::ScalarField K>
Json formal_map_json(const detloci::FormalMap<K>& f) {
  Json out = Json::array();
  for (const auto& c : f.components()) out.push_back(c.to_string());
  return out;
}

template <detloci::ScalarField K>
Json containment_json(const detloci::Containment<K>& c) {
  Json w = Json::array();
  for (const auto& x : c.witnesses) {
    if (!x) {
      w.push_back(nullptr);
      continue;
    }
    Json cof = Json::array();
    for (const auto& p : x->cofactors) cof.push_back(p.to_string());
    w.push_back(Json{{"target", x->target.to_string()}, {"cofactors", cof}});
  }
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(g.to_string());
  return Json{{"holds", c.holds()}, {"generators", gens}, {"witnesses", w}};
}

struct UnivArgs {
  std::string data;
  unsigned order = 0;
  int verify_k = 0;
};

Outcome univ_matrix(const UnivArgs& p) {
  auto doc = read_json_file(p.data);
  return with_field(detloci::prime_of(doc), [&](auto tag) {
    using K = decltype(tag);
    auto d = detloci::pair_from_json<K>(doc, tag.context());
    detloci::TruncationOrder order(p.order);
    auto u = detloci::universal_matrix(d, order);
    auto petri = d.petri();
    auto b = petri.matrix(u.matrix.ring());
    Json r{{"s", d.s()},
           {"l", d.l()},
           {"lp", d.lp()},
           {"order", p.order},
           {"universalMatrix", detloci::matrix_json(u.matrix)},
           {"petriMatrix", detloci::matrix_json(b)},
           {"petriInjective", detloci::petri_injective(petri)},
           {"linearPartMatchesPetri", u.matrix.homogeneous_part(1) == b.truncated(p.order)},
           {"higherMapsVanish", d.higher_maps_vanish()}};
    bool ok = true;
    if (p.verify_k != 0) {
      if (p.verify_k < 1 || p.verify_k > static_cast<int>(d.l()))
        throw detloci::InputError("--verify-k must be in 1.." + std::to_string(d.l()));
      auto cert = detloci::verify_tangent_cone_equiv(d, p.verify_k, order);
      r["certificate"] = Json{{"k", cert.k},
                              {"status", cert.passed() ? "PASS" : "FAIL"},
                              {"straightening", formal_map_json(cert.straightening)},
                              {"inverse", formal_map_json(cert.inverse)},
                              {"identityStraightening", cert.identity_straightening()},
                              {"entriesMatch", cert.entries_match},
                              {"inverseEntriesMatch", cert.inverse_entries_match},
                              {"inverseComposes", cert.inverse_composes},
                              {"universalInTransported", containment_json(cert.universal_in_transported)},
                              {"transportedInUniversal", containment_json(cert.transported_in_universal)},
                              {"petriInPulledBack", containment_json(cert.petri_in_pulled)},
                              {"pulledBackInPetri", containment_json(cert.pulled_in_petri)}};
      ok = cert.passed();
    }
    Json params{{"data", p.data}, {"order", p.order}};
    if (p.verify_k != 0) params["verifyK"] = p.verify_k;
    return Outcome{params, r, ok};
  });
}

struct BNArgs {
  long g = 0, n = 0, d = 0, deg_f = 0, rank_f = 0;
  int k = 0, l = 0;
};

Outcome bn_invariants(const BNArgs& p) {
  detloci::BNContext c(p.g, p.n, p.d, p.deg_f, p.rank_f, p.k, p.l);
  Json params{{"genus", p.g}, {"rank", p.n}, {"degree", p.d}, {"auxDegree", p.deg_f}, {"auxRank", p.rank_f},
              {"k", p.k}, {"h0", p.l}};
  return {params, detloci::bn_json(detloci::bn_report(c)), true};
}

struct SweepArgs {
  int max = 6;
  std::size_t complexes = 20, points = 20, pairs = 10;
};

Outcome sweep(const SweepArgs& p, std::uint64_t seed) {
  detloci::SweepOptions o;
  o.max_size = p.max;
  o.seed = seed;
  o.complexes = p.complexes;
  o.points = p.points;
  o.pairs = p.pairs;
  auto s = detloci::consistency_sweep(o);
  Json params{{"max", p.max}, {"seed", seed}, {"complexes", p.complexes}, {"points", p.points}, {"pairs", p.pairs}};
  return {params, detloci::sweep_json(s), s.passed()};
}

int emit(const Globals& g, const std::string& name, const Outcome& o) {
  Json manifest{{"tool", "detloci"}, {"version", detloci::kVersion}, {"subcommand", name}, {"parameters", o.parameters}};
  if (g.timestamp) manifest["timestamp"] = utc_now();
  Json doc{{"manifest", manifest}, {"result", o.result}, {"ok", o.ok}};
  std::ostringstream text;
  if (g.json) {
    text << doc.dump(2) << "\n";
  } else {
    flatten(doc, "", text);
  }
  if (g.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw detloci::InputError("cannot write " + g.out);
    f << text.str();
  }
  return o.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal loci, jump ideals and their singularity invariants", "detloci"};
  app.set_version_flag("--version", detloci::kVersion);
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print the JSON document instead of key/value lines");
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_flag("--timestamp", g.timestamp, "Record the wall-clock time in the manifest");

  auto fallthrough = [](CLI::App* s) { s->fallthrough(); };

  DetIdealArgs di;
  auto* c_di = app.add_subcommand("det-ideal", "Generators of J_k(a, b)");
  c_di->add_option("--a", di.a)->required();
  c_di->add_option("--b", di.b)->required();
  c_di->add_option("--k", di.k)->required();
  c_di->add_option("--prime", di.prime, "Work over F_p instead of the rationals");
  fallthrough(c_di);

  ShapeArgs inv;
  auto* c_inv = app.add_subcommand("det-invariants", "Singularity invariants of M_k(a, b)");
  c_inv->add_option("--a", inv.a)->required();
  c_inv->add_option("--b", inv.b)->required();
  c_inv->add_option("--k", inv.k)->required();
  fallthrough(c_inv);

  CountArgs cp;
  auto* c_cp = app.add_subcommand("count-points", "Matrices of rank <= r over F_q");
  c_cp->add_option("--a", cp.a)->required();
  c_cp->add_option("--b", cp.b)->required();
  c_cp->add_option("--r", cp.r)->required();
  c_cp->add_option("--q", cp.q)->required();
  c_cp->add_flag("--brute-force", cp.brute, "Also enumerate all matrices");
  fallthrough(c_cp);

  JumpArgs ja;
  auto* c_ja = app.add_subcommand("jump-ideal", "Cohomology jump ideal J^i_k of a free complex");
  c_ja->add_option("--complex", ja.complex)->required();
  c_ja->add_option("--i", ja.i)->required();
  c_ja->add_option("--k", ja.k)->required();
  c_ja->add_option("--check-points", ja.check_points, "Compare with pointwise cohomology at N random points");
  fallthrough(c_ja);

  UnivArgs ua;
  auto* c_ua = app.add_subcommand("univ-matrix", "Universal matrix of pair data modulo degree N");
  c_ua->add_option("--data", ua.data)->required();
  c_ua->add_option("--order", ua.order)->required();
  c_ua->add_option("--verify-k", ua.verify_k, "Certify the tangent cone equivalence for this k");
  fallthrough(c_ua);

  ShapeArgs rs;
  auto* c_rs = app.add_subcommand("resolve", "Divisor data of the blowup tower");
  c_rs->add_option("--a", rs.a)->required();
  c_rs->add_option("--b", rs.b)->required();
  c_rs->add_option("--k", rs.k)->required();
  fallthrough(c_rs);

  BNArgs bn;
  auto* c_bn = app.add_subcommand("bn-invariants", "Brill-Noether locus invariants");
  c_bn->add_option("--genus", bn.g)->required();
  c_bn->add_option("--rank", bn.n)->required();
  c_bn->add_option("--degree", bn.d)->required();
  c_bn->add_option("--aux-deg", bn.deg_f)->required();
  c_bn->add_option("--aux-rank", bn.rank_f)->required();
  c_bn->add_option("--k", bn.k)->required();
  c_bn->add_option("--h0", bn.l)->required();
  fallthrough(c_bn);

  int mc_a = 0;
  auto* c_mc = app.add_subcommand("mc-check", "Monodromy conjecture certificate for square matrices, k = 1");
  c_mc->add_option("--a", mc_a)->required();
  fallthrough(c_mc);

  SweepArgs sw;
  auto* c_sw = app.add_subcommand("consistency-sweep", "Run every cross-check over a parameter grid");
  c_sw->add_option("--max", sw.max, "Largest matrix size (1..8)");
  c_sw->add_option("--complexes", sw.complexes, "Random complexes in the jump-ideal suite");
  c_sw->add_option("--points", sw.points, "Points per random complex");
  c_sw->add_option("--pairs", sw.pairs, "Random pair data in the universal-matrix suite");
  fallthrough(c_sw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (sub == c_di) return emit(g, name, det_ideal(di));
    if (sub == c_inv) return emit(g, name, det_invariants(inv));
    if (sub == c_cp) return emit(g, name, count_points(cp));
    if (sub == c_ja) return emit(g, name, jump_ideal(ja, g.seed));
    if (sub == c_ua) return emit(g, name, univ_matrix(ua));
    if (sub == c_rs) return emit(g, name, resolve(rs));
    if (sub == c_bn) return emit(g, name, bn_invariants(bn));
    if (sub == c_mc) return emit(g, name, mc_check(mc_a));
    if (sub == c_sw) return emit(g, name, sweep(sw, g.seed));
  } catch (const detloci::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const detloci::AlgebraError& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
