#pragma once

// JSON encodings of scalars, polynomials, polynomial matrices, free
// complexes and truncated pair data.
//
//   polynomial: {"vars": [...], "terms": [{"coeff": "3/2", "exps": [1, 0]}], "prime": p?}
//   matrix:     {"rows": r, "cols": c, "vars": [...], "entries": [[entry, ...], ...], "prime": p?}
//               where an entry is a polynomial string ("x1*x2 - 3") or {"terms": [...]}
//   complex:    {"minDegree": m, "vars": [...]?, "ranks": [...], "differentials": [matrix, ...], "prime": p?}
//   pair data:  {"s": s, "l": l, "lp": lp, "prime": p?, "maps": [{"n": n, "coeffs": nested}]}
//               coeffs of m_{n+1} nest as [t_1]...[t_n][j][sigma] (a flat array is accepted too)

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "detloci/error.hpp"
#include "detloci/jump_ideals.hpp"
#include "detloci/parse.hpp"
#include "detloci/petri.hpp"
#include "detloci/poly_matrix.hpp"

namespace detloci {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json big_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

inline Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

template <ScalarField K>
void add_prime(Json& j, const typename K::Context& ctx) {
  if constexpr (std::is_same_v<K, Fp>) j["prime"] = ctx.prime;
}

/// The field named by an optional "prime" member.
inline std::optional<PrimeContext> prime_of(const Json& j) {
  if (!j.is_object() || !j.contains("prime") || j["prime"].is_null()) return std::nullopt;
  if (!j["prime"].is_number_unsigned()) throw InputError("\"prime\" must be a positive integer");
  return prime_context(j["prime"].get<std::uint64_t>());
}

template <ScalarField K>
K scalar_from_json(const Json& j, const typename K::Context& ctx) {
  if (j.is_string()) return K::parse(ctx, j.get<std::string>());
  if (j.is_number_integer()) return K::from_int(ctx, j.get<long>());
  throw InputError("expected a scalar (integer or string), got " + j.dump());
}

template <ScalarField K>
Json terms_json(const Polynomial<K>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"coeff", c.to_string()}, {"exps", e}});
  return terms;
}

template <ScalarField K>
Json polynomial_json(const Polynomial<K>& p) {
  Json j{{"vars", p.ring()->vars}, {"terms", terms_json(p)}};
  add_prime<K>(j, p.scalars());
  return j;
}

/// Compact form used inside reports, where the variables are listed once.
template <ScalarField K>
Json poly_entry_json(const Polynomial<K>& p) {
  return Json{{"text", p.to_string()}, {"terms", terms_json(p)}};
}

template <ScalarField K>
Json polys_json(const std::vector<Polynomial<K>>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(poly_entry_json(p));
  return out;
}

template <ScalarField K>
Polynomial<K> polynomial_from_json(const Json& j, const RingPtr<K>& ring) {
  if (j.is_string()) return parse_polynomial(ring, j.get<std::string>());
  if (j.is_number_integer()) return Polynomial<K>::constant(ring, j.get<long>());
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw InputError("polynomial must be a string or an object with \"terms\"");
  if (j.contains("vars") && j["vars"].get<std::vector<std::string>>() != ring->vars)
    throw InputError("polynomial variables do not match the surrounding ring");
  Polynomial<K> p(ring);
  for (const auto& t : j["terms"]) {
    if (!t.contains("coeff") || !t.contains("exps")) throw InputError("term needs \"coeff\" and \"exps\"");
    auto e = t["exps"].get<std::vector<long>>();
    if (e.size() != ring->nvars())
      throw InputError("term has " + std::to_string(e.size()) + " exponents for " + std::to_string(ring->nvars()) +
                       " variables");
    Exponents ex;
    for (long v : e) {
      if (v < 0) throw InputError("negative exponent");
      ex.push_back(static_cast<unsigned>(v));
    }
    p.add_term(ex, scalar_from_json<K>(t["coeff"], ring->scalars));
  }
  return p;
}

/// Stand-alone polynomial document; the ring comes from its "vars".
template <ScalarField K>
Polynomial<K> polynomial_document(const Json& j, const typename K::Context& ctx) {
  if (!j.is_object() || !j.contains("vars")) throw InputError("polynomial document needs \"vars\"");
  return polynomial_from_json(j, make_ring<K>(j["vars"].get<std::vector<std::string>>(), ctx));
}

template <ScalarField K>
Json matrix_json(const PolyMatrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_entry_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  Json j{{"rows", m.rows()}, {"cols", m.cols()}, {"vars", m.ring()->vars}, {"entries", std::move(rows)}};
  add_prime<K>(j, m.ring()->scalars);
  return j;
}

template <ScalarField K>
PolyMatrix<K> matrix_from_json(const Json& j, const RingPtr<K>& ring) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw InputError("matrix needs \"rows\", \"cols\" and \"entries\"");
  if (j.contains("vars") && j["vars"].get<std::vector<std::string>>() != ring->vars)
    throw InputError("matrix variables do not match the surrounding ring");
  auto rows = j["rows"].get<std::size_t>(), cols = j["cols"].get<std::size_t>();
  const auto& e = j["entries"];
  if (!e.is_array() || e.size() != rows) throw InputError("matrix \"entries\" must have one array per row");
  std::vector<Polynomial<K>> entries;
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != cols) throw InputError("matrix row length differs from \"cols\"");
    for (const auto& x : row) entries.push_back(polynomial_from_json(x, ring));
  }
  return PolyMatrix<K>(ring, rows, cols, std::move(entries));
}

template <ScalarField K>
Json complex_json(const FreeComplex<K>& c) {
  Json diffs = Json::array();
  for (const auto& d : c.differentials()) diffs.push_back(matrix_json(d));
  Json j{{"minDegree", c.min_degree()}, {"vars", c.ring()->vars}, {"ranks", c.ranks()}, {"differentials", diffs}};
  add_prime<K>(j, c.ring()->scalars);
  return j;
}

template <ScalarField K>
FreeComplex<K> complex_from_json(const Json& j, const typename K::Context& ctx) {
  try {
    if (!j.is_object() || !j.contains("ranks")) throw InputError("complex needs \"ranks\"");
    std::vector<std::string> vars;
    if (j.contains("vars"))
      vars = j["vars"].get<std::vector<std::string>>();
    else if (j.contains("differentials") && !j["differentials"].empty() && j["differentials"][0].contains("vars"))
      vars = j["differentials"][0]["vars"].get<std::vector<std::string>>();
    else
      throw InputError("complex needs \"vars\" (top level or on the first differential)");
    auto ring = make_ring<K>(vars, ctx);
    std::vector<PolyMatrix<K>> diffs;
    if (j.contains("differentials"))
      for (const auto& d : j["differentials"]) diffs.push_back(matrix_from_json(d, ring));
    return FreeComplex<K>(ring, j.value("minDegree", 0), j["ranks"].get<std::vector<std::size_t>>(), std::move(diffs));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed complex JSON: ") + e.what());
  }
}

namespace detail {

inline void flatten_into(const Json& j, std::vector<Json>& out) {
  if (j.is_array())
    for (const auto& x : j) flatten_into(x, out);
  else
    out.push_back(j);
}

template <ScalarField K>
Json nest(const std::vector<K>& flat, std::size_t& pos, const std::vector<std::size_t>& dims, std::size_t level) {
  Json out = Json::array();
  for (std::size_t i = 0; i < dims[level]; ++i) {
    if (level + 1 == dims.size())
      out.push_back(flat[pos++].to_string());
    else
      out.push_back(nest(flat, pos, dims, level + 1));
  }
  return out;
}

}  // namespace detail

template <ScalarField K>
Json pair_json(const LInfPairData<K>& d) {
  Json maps = Json::array();
  for (std::size_t n = 1; n <= d.n_max(); ++n) {
    std::vector<std::size_t> dims(n, d.s());
    dims.push_back(d.lp());
    dims.push_back(d.l());
    std::size_t pos = 0;
    maps.push_back(Json{{"n", n}, {"coeffs", detail::nest(d.maps()[n - 1], pos, dims, 0)}});
  }
  Json j{{"s", d.s()}, {"l", d.l()}, {"lp", d.lp()}};
  add_prime<K>(j, d.context());
  j["maps"] = std::move(maps);
  return j;
}

template <ScalarField K>
LInfPairData<K> pair_from_json(const Json& j, const typename K::Context& ctx) {
  try {
    if (!j.is_object() || !j.contains("s") || !j.contains("l") || !j.contains("lp") || !j.contains("maps"))
      throw InputError("pair data needs \"s\", \"l\", \"lp\" and \"maps\"");
    auto s = j["s"].get<std::size_t>(), l = j["l"].get<std::size_t>(), lp = j["lp"].get<std::size_t>();
    std::vector<std::vector<K>> maps;
    for (const auto& m : j["maps"]) {
      auto n = m.at("n").get<std::size_t>();
      if (n != maps.size() + 1)
        throw InputError("\"maps\" must list n = 1, 2, ... in order; got n=" + std::to_string(n) + " at position " +
                         std::to_string(maps.size() + 1));
      std::vector<Json> flat;
      detail::flatten_into(m.at("coeffs"), flat);
      std::vector<K> coeffs;
      for (const auto& x : flat) coeffs.push_back(scalar_from_json<K>(x, ctx));
      maps.push_back(std::move(coeffs));
    }
    return LInfPairData<K>(s, l, lp, std::move(maps), ctx);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed pair JSON: ") + e.what());
  }
}

}  // namespace detloci
