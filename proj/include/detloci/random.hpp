#pragma once

// Seeded generators for the randomized suites: valid free complexes with
// polynomial differentials, sample points, and pair data with injective
// Petri map.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "detloci/jump_ideals.hpp"
#include "detloci/petri.hpp"

namespace detloci {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

template <ScalarField K>
K small_scalar(Rng& rng, const typename K::Context& ctx, long bound = 2) {
  return K::from_int(ctx, uniform(rng, -bound, bound));
}

/// Sparse random polynomial of degree <= max_degree with small coefficients.
template <ScalarField K>
Polynomial<K> random_polynomial(Rng& rng, const RingPtr<K>& ring, unsigned max_degree, std::size_t max_terms = 3) {
  Polynomial<K> p(ring);
  std::size_t terms = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(ring->nvars(), 0);
    unsigned deg = static_cast<unsigned>(uniform(rng, 0, max_degree));
    for (unsigned d = 0; d < deg && ring->nvars() > 0; ++d)
      ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ring->nvars()) - 1))];
    p.add_term(e, small_scalar<K>(rng, ring->scalars));
  }
  return p;
}

/// Random invertible n x n scalar matrix and its inverse.
template <ScalarField K>
std::pair<DenseMatrix<K>, DenseMatrix<K>> random_invertible(Rng& rng, std::size_t n, const typename K::Context& ctx) {
  while (true) {
    DenseMatrix<K> g(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = small_scalar<K>(rng, ctx, 1);
    if (auto inv = g.inverse()) return {std::move(g), std::move(*inv)};
  }
}

template <ScalarField K>
PolyMatrix<K> scalar_matrix(const RingPtr<K>& ring, const DenseMatrix<K>& m) {
  PolyMatrix<K> out(ring, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = Polynomial<K>::constant(ring, m(i, j));
  return out;
}

struct ComplexShape {
  std::size_t max_modules = 4;
  std::size_t max_rank = 3;
  std::size_t max_vars = 2;
  unsigned max_degree = 2;
};

/// Each F^i splits as X_i (+) Y_i; d^i kills X_i and sends Y_i into X_{i+1}
/// by a random polynomial matrix, so d^{i+1} d^i = 0. The result is then
/// conjugated by random invertible scalar matrices to hide the splitting.
template <ScalarField K>
FreeComplex<K> random_complex(Rng& rng, const typename K::Context& ctx, const ComplexShape& shape = {}) {
  std::size_t nvars = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(shape.max_vars)));
  auto ring = make_ring<K>(numbered_vars("x", nvars), ctx);
  std::size_t modules = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(shape.max_modules)));
  std::vector<std::size_t> ranks, x_dim;
  for (std::size_t t = 0; t < modules; ++t) {
    ranks.push_back(static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(shape.max_rank))));
    x_dim.push_back(t == 0 ? 0 : static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ranks.back()))));
  }
  std::vector<DenseMatrix<K>> g, g_inv;
  for (auto r : ranks) {
    auto [m, inv] = random_invertible<K>(rng, r, ctx);
    g.push_back(std::move(m));
    g_inv.push_back(std::move(inv));
  }
  std::vector<PolyMatrix<K>> diffs;
  for (std::size_t t = 0; t + 1 < modules; ++t) {
    // source Y_t = coordinates x_dim[t].., target X_{t+1} = coordinates 0..x_dim[t+1]-1
    PolyMatrix<K> d(ring, ranks[t + 1], ranks[t]);
    for (std::size_t i = 0; i < x_dim[t + 1]; ++i)
      for (std::size_t j = x_dim[t]; j < ranks[t]; ++j) d(i, j) = random_polynomial(rng, ring, shape.max_degree);
    diffs.push_back(scalar_matrix(ring, g[t + 1]) * d * scalar_matrix(ring, g_inv[t]));
  }
  int min_degree = static_cast<int>(uniform(rng, -1, 1));
  return FreeComplex<K>(ring, min_degree, std::move(ranks), std::move(diffs));
}

/// Points with coordinates in {-1, 0, 1, 2}, biased toward the origin so
/// that jump loci through it are hit.
template <ScalarField K>
std::vector<std::vector<K>> random_points(Rng& rng, std::size_t nvars, std::size_t count,
                                          const typename K::Context& ctx) {
  std::vector<std::vector<K>> pts;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<K> p;
    for (std::size_t v = 0; v < nvars; ++v) p.push_back(K::from_int(ctx, c == 0 ? 0 : uniform(rng, -1, 2)));
    pts.push_back(std::move(p));
  }
  return pts;
}

struct PairShape {
  std::size_t max_s = 5;
  std::size_t max_entries = 4;  // l * lp
  std::size_t n_max = 3;
  bool higher_maps = true;
};

/// Pair data with injective Petri map and random symmetric higher maps.
template <ScalarField K>
LInfPairData<K> random_pair(Rng& rng, const typename K::Context& ctx, const PairShape& shape = {}) {
  std::size_t l, lp;
  do {
    l = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(shape.max_entries)));
    lp = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(shape.max_entries)));
  } while (l * lp > shape.max_entries || l * lp > shape.max_s);
  std::size_t s = static_cast<std::size_t>(uniform(rng, static_cast<long>(l * lp), static_cast<long>(shape.max_s)));
  std::vector<std::vector<K>> maps;
  while (true) {
    std::vector<K> m2;
    for (std::size_t i = 0; i < s * l * lp; ++i) m2.push_back(small_scalar<K>(rng, ctx));
    if (petri_injective(PetriTensor<K>(s, l, lp, m2, ctx))) {
      maps.push_back(std::move(m2));
      break;
    }
  }
  std::size_t tuples = s;
  for (std::size_t n = 2; n <= shape.n_max; ++n) {
    tuples *= s;
    std::vector<K> m(tuples * l * lp, zero_of<K>(ctx));
    if (shape.higher_maps) {
      // draw one value per sorted tuple, then copy it to every permutation
      for (const auto& t : LInfPairData<K>::tuples(s, n)) {
        if (!std::is_sorted(t.begin(), t.end())) continue;
        for (std::size_t j = 0; j < lp; ++j)
          for (std::size_t sigma = 0; sigma < l; ++sigma) {
            K v = uniform(rng, 0, 2) == 0 ? small_scalar<K>(rng, ctx) : zero_of<K>(ctx);
            auto perm = t;
            do {
              std::size_t idx = 0;
              for (auto x : perm) idx = idx * s + x;
              m[idx * lp * l + j * l + sigma] = v;
            } while (std::next_permutation(perm.begin(), perm.end()));
          }
      }
    }
    maps.push_back(std::move(m));
  }
  return LInfPairData<K>(s, l, lp, std::move(maps), ctx);
}

}  // namespace detloci
