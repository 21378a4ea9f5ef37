#pragma once

// Numerical Brill-Noether data for loci V_k(F) = {E : h^0(E (x) F) >= k}
// in the moduli of rank-n, degree-d bundles on a genus-g curve, and their
// reduction to the generic l' x l determinantal model.

#include <string>

#include "detloci/error.hpp"
#include "detloci/invariant_report.hpp"

namespace detloci {

struct BNContext {
  long g, n, d, deg_f, rank_f;
  int k;
  int l;  // h^0(E (x) F) at the point E

  BNContext(long g_, long n_, long d_, long deg_f_, long rank_f_, int k_, int l_)
      : g(g_), n(n_), d(d_), deg_f(deg_f_), rank_f(rank_f_), k(k_), l(l_) {
    if (g < 2) throw InputError("genus must be >= 2, got " + std::to_string(g));
    if (n < 1) throw InputError("rank must be >= 1, got " + std::to_string(n));
    if (d < 0) throw InputError("degree must be >= 0, got " + std::to_string(d));
    if (rank_f < 1) throw InputError("auxiliary rank must be >= 1, got " + std::to_string(rank_f));
    if (k < 1) throw InputError("k must be >= 1, got " + std::to_string(k));
    if (l < 1) throw InputError("h0 must be >= 1, got " + std::to_string(l));
    if (k > l) throw InputError("need k <= h0, got k=" + std::to_string(k) + " h0=" + std::to_string(l));
  }
};

/// chi(E (x) F) = n deg F - rank F (n(g-1) - d).
inline long chi(const BNContext& c) { return c.n * c.deg_f - c.rank_f * (c.n * (c.g - 1) - c.d); }

inline long ambient_dimension(const BNContext& c) { return c.n * c.n * (c.g - 1) + 1; }

inline long rho(const BNContext& c) { return ambient_dimension(c) - static_cast<long>(c.k) * (c.k - chi(c)); }

/// h^1(E (x) F) = l - chi.
inline long l_prime(const BNContext& c) { return c.l - chi(c); }

/// Classical g - (r+1)(g-d+r) with r = k-1 (n = 1, F trivial).
inline long classical_bn_number(long g, long d, long k) { return g - k * (g - d + k - 1); }

struct DeterminantalModel {
  GenericShape shape;  // (a, b) = (l, l')
  int k;
  long codimension;  // k(k - chi)
};

inline DeterminantalModel to_determinantal(const BNContext& c) {
  long lp = l_prime(c);
  if (c.l > lp)
    throw InputError("h0 = " + std::to_string(c.l) + " exceeds h1 = " + std::to_string(lp) +
                     "; the model assumes h0 <= h1, which can always be arranged by replacing F with a suitable "
                     "twist independent of E");
  GenericShape shape(c.l, static_cast<int>(lp));
  long codim = static_cast<long>(c.k) * (c.k - chi(c));
  if (codim != stratum_codimension(shape, c.k))
    throw AlgebraError("codimension mismatch: k(k-chi) = " + std::to_string(codim) + " but codim M_k = " +
                       std::to_string(stratum_codimension(shape, c.k)));
  return {shape, c.k, codim};
}

struct BNReport {
  BNContext context;
  long chi;
  long l_prime;
  long rho;
  long ambient_dimension;
  DeterminantalModel model;
  InvariantReport invariants;
  std::string zeta_note;
  std::string singular_locus;
  std::string petri_assumption;
};

inline BNReport bn_report(const BNContext& c) {
  auto model = to_determinantal(c);
  auto inv = invariant_report(model.shape.a(), model.shape.b(), c.k);
  BNReport r{c,
             chi(c),
             l_prime(c),
             rho(c),
             ambient_dimension(c),
             model,
             std::move(inv),
             "",
             "the singular locus of V_" + std::to_string(c.k) + "(F) is V_" + std::to_string(c.k + 1) + "(F)",
             "assumed: the Petri map of E and F is injective"};
  if (r.invariants.zeta)
    r.zeta_note = "poles of the local zeta function at E are a subset of the listed set";
  if (r.rho != r.ambient_dimension - model.codimension) throw AlgebraError("rho differs from ambient - codim");
  return r;
}

}  // namespace detloci
