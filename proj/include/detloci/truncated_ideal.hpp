#pragma once

// Ideal membership in the truncated ring K[x]/m^N, decided by linear algebra
// on the finite-dimensional space of polynomials of degree < N. Positive
// answers come with explicit cofactors that can be re-checked by expansion.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "detloci/formal.hpp"
#include "detloci/linalg.hpp"
#include "detloci/polynomial.hpp"

namespace detloci {

/// All exponent vectors in s variables of total degree < bound, in graded
/// lexicographic order.
inline std::vector<Exponents> monomials_below(std::size_t s, unsigned bound) {
  std::vector<Exponents> out;
  Exponents e(s, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == s) {
      out.push_back(e);
      return;
    }
    for (unsigned d = 0; d <= remaining; ++d) {
      e[var] = d;
      self(self, var + 1, remaining - d);
    }
    e[var] = 0;
  };
  if (bound > 0) rec(rec, 0, bound - 1);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

/// target = sum_j cofactors[j] * generators[j]  (mod degree N)
template <ScalarField K>
struct MembershipWitness {
  Polynomial<K> target;
  std::vector<Polynomial<K>> cofactors;
};

template <ScalarField K>
bool check_witness(const MembershipWitness<K>& w, const std::vector<Polynomial<K>>& generators, TruncationOrder n) {
  if (w.cofactors.size() != generators.size()) return false;
  Polynomial<K> sum(w.target.ring());
  for (std::size_t j = 0; j < generators.size(); ++j)
    sum += Polynomial<K>::multiply(w.cofactors[j], generators[j], n.value());
  return sum.truncated(n.value()) == w.target.truncated(n.value());
}

/// For each target, cofactors expressing it in the ideal generated by
/// `generators` modulo degree N, or nullopt when it is not a member.
template <ScalarField K>
std::vector<std::optional<MembershipWitness<K>>> truncated_membership(const std::vector<Polynomial<K>>& targets,
                                                                      const std::vector<Polynomial<K>>& generators,
                                                                      const RingPtr<K>& ring, TruncationOrder n) {
  const unsigned bound = n.value();
  const std::size_t s = ring->nvars();
  auto basis = monomials_below(s, bound);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  // columns: x^m * g_j for every monomial m that can still contribute
  struct Column {
    std::size_t generator;
    Exponents monomial;
  };
  std::vector<Column> columns;
  std::vector<Polynomial<K>> products;
  const K one = one_of<K>(ring->scalars);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    int ord = generators[j].order();
    if (ord < 0 || static_cast<unsigned>(ord) >= bound) continue;
    for (const auto& m : basis) {
      if (total_degree(m) + static_cast<unsigned>(ord) >= bound) continue;
      auto prod = Polynomial<K>::multiply(Polynomial<K>::monomial(ring, m, one), generators[j], bound);
      if (prod.is_zero()) continue;
      columns.push_back({j, m});
      products.push_back(std::move(prod));
    }
  }

  DenseMatrix<K> span(basis.size(), columns.size(), ring->scalars);
  for (std::size_t c = 0; c < products.size(); ++c)
    for (const auto& [e, coeff] : products[c].terms()) span(index.at(e), c) = coeff;

  std::vector<std::vector<K>> rhs;
  for (const auto& t : targets) {
    std::vector<K> v(basis.size(), zero_of<K>(ring->scalars));
    auto truncated = t.truncated(bound);
    for (const auto& [e, coeff] : truncated.terms()) v[index.at(e)] = coeff;
    rhs.push_back(std::move(v));
  }

  auto solutions = span.solve_all(rhs);
  std::vector<std::optional<MembershipWitness<K>>> out;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (!solutions[t]) {
      out.emplace_back(std::nullopt);
      continue;
    }
    MembershipWitness<K> w{targets[t].truncated(bound), std::vector<Polynomial<K>>(generators.size(), Polynomial<K>(ring))};
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const K& coeff = (*solutions[t])[c];
      if (!coeff.is_zero()) w.cofactors[columns[c].generator].add_term(columns[c].monomial, coeff);
    }
    out.emplace_back(std::move(w));
  }
  return out;
}

}  // namespace detloci
