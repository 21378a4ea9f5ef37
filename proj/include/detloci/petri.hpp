#pragma once

// Petri tensors, truncated L-infinity pair data, the universal matrix of the
// deformation problem at finite jet order, and the coordinate change that
// turns the universal matrix into its linear part.
//
// Index conventions: H^1 has basis e_1..e_s with dual coordinates x_1..x_s;
// V^0 has dimension l (columns), V^1 has dimension lp (rows). The Petri
// matrix B is lp x l with B_{j,sigma} = sum_t c[t][j][sigma] x_t.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detloci/error.hpp"
#include "detloci/formal.hpp"
#include "detloci/linalg.hpp"
#include "detloci/poly_matrix.hpp"
#include "detloci/truncated_ideal.hpp"

namespace detloci {

/// Bilinear map H^1 (x) V^0 -> V^1, equivalently an lp x l matrix of linear
/// forms in s variables.
template <ScalarField K>
class PetriTensor {
 public:
  PetriTensor(std::size_t s, std::size_t l, std::size_t lp, std::vector<K> coeffs, typename K::Context ctx = {})
      : s_(s), l_(l), lp_(lp), ctx_(ctx), c_(std::move(coeffs)) {
    if (c_.size() != s * l * lp)
      throw InputError("Petri tensor needs s*l*lp = " + std::to_string(s * l * lp) + " coefficients, got " +
                       std::to_string(c_.size()));
  }

  /// Reads the coefficients off a matrix of homogeneous linear forms.
  static PetriTensor from_matrix(const PolyMatrix<K>& b) {
    const auto& ring = b.ring();
    std::size_t s = ring->nvars(), l = b.cols(), lp = b.rows();
    std::vector<K> c(s * l * lp, zero_of<K>(ring->scalars));
    for (std::size_t j = 0; j < lp; ++j)
      for (std::size_t sigma = 0; sigma < l; ++sigma) {
        const auto& entry = b(j, sigma);
        if (!(entry.homogeneous_part(1) == entry))
          throw InputError("Petri matrix entry (" + std::to_string(j + 1) + "," + std::to_string(sigma + 1) +
                           ") is not a linear form");
        for (std::size_t t = 0; t < s; ++t) {
          Exponents e(s, 0);
          e[t] = 1;
          c[(t * lp + j) * l + sigma] = entry.coefficient(e);
        }
      }
    return PetriTensor(s, l, lp, std::move(c), ring->scalars);
  }

  std::size_t s() const { return s_; }
  std::size_t l() const { return l_; }
  std::size_t lp() const { return lp_; }
  const typename K::Context& context() const { return ctx_; }
  const std::vector<K>& coefficients() const { return c_; }

  const K& operator()(std::size_t t, std::size_t j, std::size_t sigma) const { return c_[(t * lp_ + j) * l_ + sigma]; }

  /// B as a polynomial matrix in the given ring (which must have s variables).
  PolyMatrix<K> matrix(const RingPtr<K>& ring) const {
    if (ring->nvars() != s_) throw InputError("Petri matrix ring must have s variables");
    PolyMatrix<K> b(ring, lp_, l_);
    for (std::size_t j = 0; j < lp_; ++j)
      for (std::size_t sigma = 0; sigma < l_; ++sigma)
        for (std::size_t t = 0; t < s_; ++t)
          if (!(*this)(t, j, sigma).is_zero()) b(j, sigma) += Polynomial<K>::variable(ring, t) * (*this)(t, j, sigma);
    return b;
  }
  PolyMatrix<K> matrix() const { return matrix(make_ring<K>(numbered_vars("x", s_), ctx_)); }

  /// (l*lp) x s matrix: row (j, sigma) holds the coefficients of B_{j,sigma}.
  DenseMatrix<K> entry_forms() const {
    DenseMatrix<K> m(l_ * lp_, s_, ctx_);
    for (std::size_t j = 0; j < lp_; ++j)
      for (std::size_t sigma = 0; sigma < l_; ++sigma)
        for (std::size_t t = 0; t < s_; ++t) m(j * l_ + sigma, t) = (*this)(t, j, sigma);
    return m;
  }

 private:
  std::size_t s_, l_, lp_;
  typename K::Context ctx_;
  std::vector<K> c_;
};

/// True iff the l*lp entries of B are linearly independent linear forms,
/// i.e. V^0 (x) (V^1)^dual -> (H^1)^dual is injective.
template <ScalarField K>
bool petri_injective(const PetriTensor<K>& t) {
  return t.entry_forms().rank() == t.l() * t.lp();
}

/// Minors of size l-k+1 of B.
template <ScalarField K>
std::vector<Polynomial<K>> tangent_cone_ideal(const PetriTensor<K>& t, int k, const RingPtr<K>& ring) {
  if (k < 1 || static_cast<std::size_t>(k) > t.l())
    throw InputError("tangent cone index k=" + std::to_string(k) + " out of range 1.." + std::to_string(t.l()));
  return minors_of_size(t.matrix(ring), static_cast<int>(t.l()) - k + 1);
}
template <ScalarField K>
std::vector<Polynomial<K>> tangent_cone_ideal(const PetriTensor<K>& t, int k) {
  return tangent_cone_ideal(t, k, make_ring<K>(numbered_vars("x", t.s()), t.context()));
}

/// Kernel of H^1 -> Hom(V^0, V^1), omega -> B(omega): the tangent space of
/// the jump locus at k = l. Basis vectors are coordinate vectors in H^1.
template <ScalarField K>
std::vector<std::vector<K>> tangent_space_jump_locus(const PetriTensor<K>& t) {
  return t.entry_forms().kernel();
}

/// Truncated L-infinity pair data (graded symmetric convention): for
/// n = 1..n_max a tensor m_{n+1}: Sym^n(H^1) (x) V^0 -> V^1. Stored densely
/// over ordered n-tuples, index ((t_1..t_n), j, sigma), and required to be
/// symmetric in the tuple.
template <ScalarField K>
class LInfPairData {
 public:
  LInfPairData(std::size_t s, std::size_t l, std::size_t lp, std::vector<std::vector<K>> maps,
               typename K::Context ctx = {})
      : s_(s), l_(l), lp_(lp), ctx_(ctx), maps_(std::move(maps)) {
    if (s == 0 || l == 0 || lp == 0) throw InputError("pair data dimensions s, l, lp must be positive");
    if (maps_.empty()) throw InputError("pair data needs at least the bilinear map m_2");
    std::size_t tuples = 1;
    for (std::size_t n = 1; n <= maps_.size(); ++n) {
      tuples *= s;
      if (maps_[n - 1].size() != tuples * l * lp)
        throw InputError("m_" + std::to_string(n + 1) + " needs " + std::to_string(tuples * l * lp) +
                         " coefficients, got " + std::to_string(maps_[n - 1].size()));
      check_symmetric(n);
    }
  }

  std::size_t s() const { return s_; }
  std::size_t l() const { return l_; }
  std::size_t lp() const { return lp_; }
  std::size_t n_max() const { return maps_.size(); }
  const typename K::Context& context() const { return ctx_; }
  const std::vector<std::vector<K>>& maps() const { return maps_; }

  /// Coefficient of m_{n+1}(e_{t_1} ... e_{t_n}, sigma) along basis vector j of V^1.
  const K& coefficient(const std::vector<std::size_t>& tuple, std::size_t j, std::size_t sigma) const {
    return maps_.at(tuple.size() - 1)[flat(tuple) * lp_ * l_ + j * l_ + sigma];
  }

  PetriTensor<K> petri() const { return PetriTensor<K>(s_, l_, lp_, maps_.front(), ctx_); }

  bool higher_maps_vanish() const {
    for (std::size_t n = 2; n <= maps_.size(); ++n)
      for (const auto& c : maps_[n - 1])
        if (!c.is_zero()) return false;
    return true;
  }

  static std::vector<std::vector<std::size_t>> tuples(std::size_t s, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(n, 0);
    while (true) {
      out.push_back(t);
      std::size_t i = n;
      while (i > 0 && t[i - 1] == s - 1) t[--i] = 0;
      if (i == 0) break;
      ++t[i - 1];
    }
    return out;
  }

 private:
  std::size_t flat(const std::vector<std::size_t>& tuple) const {
    std::size_t idx = 0;
    for (auto t : tuple) idx = idx * s_ + t;
    return idx;
  }

  void check_symmetric(std::size_t n) {
    for (const auto& t : tuples(s_, n)) {
      auto sorted = t;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t j = 0; j < lp_; ++j)
        for (std::size_t sigma = 0; sigma < l_; ++sigma)
          if (!(coefficient(t, j, sigma) == coefficient(sorted, j, sigma)))
            throw InputError("m_" + std::to_string(n + 1) + " is not symmetric in its H^1 arguments");
    }
  }

  std::size_t s_, l_, lp_;
  typename K::Context ctx_;
  std::vector<std::vector<K>> maps_;
};

template <ScalarField K>
struct UniversalMatrix {
  PolyMatrix<K> matrix;  // lp x l, entries truncated below degree N
  TruncationOrder order;
};

/// d_univ(sigma) = sum_{n>=1} 1/n! m_{n+1}(omega_univ^n, sigma) with
/// omega_univ = sum_i e_i (x) x_i, modulo degree N. Maps beyond n_max are zero.
template <ScalarField K>
UniversalMatrix<K> universal_matrix(const LInfPairData<K>& d, TruncationOrder n, const RingPtr<K>& ring) {
  if (ring->nvars() != d.s()) throw InputError("universal matrix ring must have s variables");
  PolyMatrix<K> u(ring, d.lp(), d.l());
  K factorial = one_of<K>(ring->scalars);
  for (std::size_t deg = 1; deg <= d.n_max() && deg < n.value(); ++deg) {
    factorial *= K::from_int(ring->scalars, static_cast<long>(deg));
    K weight = factorial.inverse();
    for (const auto& tuple : LInfPairData<K>::tuples(d.s(), deg)) {
      Exponents e(d.s(), 0);
      for (auto t : tuple) ++e[t];
      for (std::size_t j = 0; j < d.lp(); ++j)
        for (std::size_t sigma = 0; sigma < d.l(); ++sigma) {
          const K& c = d.coefficient(tuple, j, sigma);
          if (!c.is_zero()) u(j, sigma).add_term(e, c * weight);
        }
    }
  }
  return {std::move(u), n};
}
template <ScalarField K>
UniversalMatrix<K> universal_matrix(const LInfPairData<K>& d, TruncationOrder n) {
  return universal_matrix(d, n, make_ring<K>(numbered_vars("x", d.s()), d.context()));
}

/// phi with B(phi(x)) == u(x) mod degree N, entrywise. The entries of B are
/// completed to a linear coordinate system y = A x by standard basis vectors;
/// psi sends the entry coordinates to the full entries of u and is linear on
/// the complement, and phi = A^{-1} psi.
template <ScalarField K>
FormalMap<K> straighten_coordinates(const UniversalMatrix<K>& u, const PetriTensor<K>& t) {
  const auto& ring = u.matrix.ring();
  const std::size_t s = t.s(), count = t.l() * t.lp();
  const unsigned bound = u.order.value();
  if (!petri_injective(t)) throw AlgebraError("Petri map not injective: cannot straighten coordinates");
  if (u.matrix.rows() != t.lp() || u.matrix.cols() != t.l())
    throw InputError("universal matrix shape does not match the Petri tensor");
  PolyMatrix<K> b = t.matrix(ring);
  for (std::size_t j = 0; j < t.lp(); ++j)
    for (std::size_t sigma = 0; sigma < t.l(); ++sigma) {
      const auto& entry = u.matrix(j, sigma);
      if (!entry.constant_term().is_zero() || !(entry.homogeneous_part(1) == b(j, sigma).truncated(bound)))
        throw AlgebraError("linear part mismatch: universal matrix entry (" + std::to_string(j + 1) + "," +
                           std::to_string(sigma + 1) + ") does not reduce to the Petri matrix");
    }

  DenseMatrix<K> forms = t.entry_forms();
  DenseMatrix<K> a(s, s, t.context());
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t c = 0; c < s; ++c) a(p, c) = forms(p, c);
  std::size_t filled = count;
  for (std::size_t c = 0; c < s && filled < s; ++c) {
    DenseMatrix<K> trial(filled + 1, s, t.context());
    for (std::size_t r = 0; r < filled; ++r)
      for (std::size_t cc = 0; cc < s; ++cc) trial(r, cc) = a(r, cc);
    trial(filled, c) = one_of<K>(t.context());
    if (trial.rank() == filled + 1) {
      a(filled, c) = one_of<K>(t.context());
      ++filled;
    }
  }
  auto a_inv = a.inverse();
  if (!a_inv) throw AlgebraError("Petri map not injective: entry forms do not extend to a basis");

  std::vector<Polynomial<K>> psi;
  for (std::size_t p = 0; p < s; ++p) {
    if (p < count) {
      psi.push_back(u.matrix(p / t.l(), p % t.l()).truncated(bound));
    } else {
      Polynomial<K> lin(ring);
      for (std::size_t c = 0; c < s; ++c)
        if (!a(p, c).is_zero()) lin += Polynomial<K>::variable(ring, c) * a(p, c);
      psi.push_back(std::move(lin));
    }
  }
  std::vector<Polynomial<K>> phi(s, Polynomial<K>(ring));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t p = 0; p < s; ++p)
      if (!(*a_inv)(i, p).is_zero()) phi[i] += psi[p] * (*a_inv)(i, p);
  return FormalMap<K>(std::move(phi));
}

template <ScalarField K>
struct Containment {
  std::vector<Polynomial<K>> targets;
  std::vector<Polynomial<K>> generators;
  std::vector<std::optional<MembershipWitness<K>>> witnesses;

  bool holds() const {
    for (const auto& w : witnesses)
      if (!w) return false;
    return true;
  }
};

template <ScalarField K>
Containment<K> prove_containment(std::vector<Polynomial<K>> targets, std::vector<Polynomial<K>> generators,
                                 const RingPtr<K>& ring, TruncationOrder n) {
  auto w = truncated_membership(targets, generators, ring, n);
  return {std::move(targets), std::move(generators), std::move(w)};
}

/// Jet-level certificate that the jump ideal J^0_k(d_univ) is the
/// determinantal ideal J_k(B) after a formal change of coordinates.
template <ScalarField K>
struct TangentConeCertificate {
  int k;
  TruncationOrder order;
  UniversalMatrix<K> universal;
  PolyMatrix<K> petri_matrix;
  FormalMap<K> straightening;  // phi: B(phi(x)) == u(x)
  FormalMap<K> inverse;        // theta = phi^{-1}: u(theta(x)) == B(x)
  bool entries_match = false;          // B o phi == u entrywise
  bool inverse_entries_match = false;  // u o theta == B entrywise
  bool inverse_composes = false;       // phi o theta == theta o phi == id
  Containment<K> universal_in_transported;  // J(u) in phi^* J(B)
  Containment<K> transported_in_universal;  // phi^* J(B) in J(u)
  Containment<K> petri_in_pulled;           // J(B) in theta^* J(u)
  Containment<K> pulled_in_petri;           // theta^* J(u) in J(B)

  bool identity_straightening() const {
    return straightening.equals_mod(FormalMap<K>::identity(straightening.ring()), order);
  }
  bool passed() const {
    return entries_match && inverse_entries_match && inverse_composes && universal_in_transported.holds() &&
           transported_in_universal.holds() && petri_in_pulled.holds() && pulled_in_petri.holds();
  }
};

template <ScalarField K>
std::vector<Polynomial<K>> truncated_minors(const PolyMatrix<K>& m, int size, unsigned bound) {
  std::vector<Polynomial<K>> out;
  for (auto& g : minors_of_size(m, size)) {
    auto t = g.truncated(bound);
    if (!t.is_zero()) out.push_back(std::move(t));
  }
  return out;
}

template <ScalarField K>
TangentConeCertificate<K> verify_tangent_cone_equiv(const LInfPairData<K>& d, int k, TruncationOrder n) {
  auto ring = make_ring<K>(numbered_vars("x", d.s()), d.context());
  auto petri = d.petri();
  if (!petri_injective(petri)) throw AlgebraError("Petri map not injective: tangent cone equivalence not applicable");
  auto u = universal_matrix(d, n, ring);
  auto b = petri.matrix(ring);
  auto phi = straighten_coordinates(u, petri);
  auto theta = invert_formal(phi, n);
  const unsigned bound = n.value();
  const int size = static_cast<int>(d.l()) - k + 1;

  auto b_phi = b.substitute(std::span(phi.components()), bound);
  auto u_theta = u.matrix.substitute(std::span(theta.components()), bound);
  auto id = FormalMap<K>::identity(ring);

  auto u_minors = truncated_minors(u.matrix, size, bound);
  auto b_minors = truncated_minors(b, size, bound);
  std::vector<Polynomial<K>> b_minors_phi, u_minors_theta;
  for (const auto& g : b_minors) b_minors_phi.push_back(phi.apply(g, n));
  for (const auto& g : u_minors) u_minors_theta.push_back(theta.apply(g, n));

  TangentConeCertificate<K> cert{
      k,
      n,
      u,
      b,
      phi,
      theta,
      b_phi == u.matrix.truncated(bound),
      u_theta == b.truncated(bound),
      compose(phi, theta, n).equals_mod(id, n) && compose(theta, phi, n).equals_mod(id, n),
      prove_containment(u_minors, b_minors_phi, ring, n),
      prove_containment(b_minors_phi, u_minors, ring, n),
      prove_containment(b_minors, u_minors_theta, ring, n),
      prove_containment(u_minors_theta, b_minors, ring, n),
  };
  return cert;
}

}  // namespace detloci
