#pragma once

// Jets of formal power series: polynomials modulo the N-th power of the
// maximal ideal at the origin, and formal coordinate changes x_i -> F_i(x).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detloci/error.hpp"
#include "detloci/linalg.hpp"
#include "detloci/polynomial.hpp"

namespace detloci {

/// Work modulo terms of total degree >= N.
class TruncationOrder {
 public:
  explicit TruncationOrder(unsigned n) : n_(n) {
    if (n < 1) throw InputError("truncation order must be at least 1");
  }
  unsigned value() const { return n_; }
  friend bool operator==(const TruncationOrder&, const TruncationOrder&) = default;

 private:
  unsigned n_;
};

template <ScalarField K>
Polynomial<K> truncate(const Polynomial<K>& p, TruncationOrder n) {
  return p.truncated(n.value());
}

/// Endomorphism of the truncated ring given by the images of the variables.
/// Components have no constant term; the linear part is kept with its
/// determinant.
template <ScalarField K>
class FormalMap {
 public:
  using Poly = Polynomial<K>;

  explicit FormalMap(std::vector<Poly> components) : components_(std::move(components)) {
    if (components_.empty()) throw InputError("formal map needs at least one component");
    const auto& ring = components_.front().ring();
    if (ring->nvars() != components_.size())
      throw InputError("formal map must have one component per variable");
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (!components_[i].same_ring(components_.front())) throw InputError("formal map components in different rings");
      if (!components_[i].constant_term().is_zero())
        throw InputError("formal map component " + std::to_string(i + 1) + " has a nonzero constant term");
    }
    std::size_t s = components_.size();
    linear_ = DenseMatrix<K>(s, s, ring->scalars);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        Exponents e(s, 0);
        e[j] = 1;
        (*linear_)(i, j) = components_[i].coefficient(e);
      }
    determinant_ = linear_->determinant();
  }

  static FormalMap identity(const RingPtr<K>& ring) {
    std::vector<Poly> c;
    for (std::size_t i = 0; i < ring->nvars(); ++i) c.push_back(Poly::variable(ring, i));
    return FormalMap(std::move(c));
  }

  /// The linear substitution x -> A x.
  static FormalMap linear(const RingPtr<K>& ring, const DenseMatrix<K>& a) {
    std::size_t s = ring->nvars();
    if (a.rows() != s || a.cols() != s) throw InputError("linear map size does not match variable count");
    std::vector<Poly> c(s, Poly(ring));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) c[i] += Poly::variable(ring, j) * a(i, j);
    return FormalMap(std::move(c));
  }

  std::size_t size() const { return components_.size(); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }
  const RingPtr<K>& ring() const { return components_.front().ring(); }
  const DenseMatrix<K>& linear_part() const { return *linear_; }
  const K& linear_determinant() const { return determinant_; }
  bool is_invertible() const { return !determinant_.is_zero(); }

  /// p(F(x)) modulo degree N.
  Poly apply(const Poly& p, TruncationOrder n) const { return p.substitute(std::span(components_), n.value()); }

  FormalMap truncated(TruncationOrder n) const {
    std::vector<Poly> c;
    for (const auto& f : components_) c.push_back(f.truncated(n.value()));
    return FormalMap(std::move(c));
  }

  bool equals_mod(const FormalMap& o, TruncationOrder n) const {
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (!(components_[i].truncated(n.value()) == o.components_[i].truncated(n.value()))) return false;
    return true;
  }

 private:
  std::vector<Poly> components_;
  std::optional<DenseMatrix<K>> linear_;
  K determinant_;
};

/// (outer o inner)_i = outer_i(inner_1, ..., inner_s) mod degree N.
template <ScalarField K>
FormalMap<K> compose(const FormalMap<K>& outer, const FormalMap<K>& inner, TruncationOrder n) {
  if (outer.size() != inner.size()) throw InputError("composing formal maps of different sizes");
  std::vector<Polynomial<K>> c;
  for (const auto& f : outer.components()) c.push_back(inner.apply(f, n));
  return FormalMap<K>(std::move(c));
}

/// Inverse modulo degree N, built order by order: with F = A x + H(x),
/// G_{t+1} = A^{-1} (x - H(G_t)) gains one correct degree per step.
template <ScalarField K>
FormalMap<K> invert_formal(const FormalMap<K>& f, TruncationOrder n) {
  auto a_inv = f.linear_part().inverse();
  if (!a_inv) throw AlgebraError("not a formal isomorphism: linear part is singular");
  const auto& ring = f.ring();
  std::size_t s = f.size();
  unsigned bound = n.value();

  std::vector<Polynomial<K>> higher;
  for (const auto& c : f.components()) {
    Polynomial<K> h = c;
    h -= c.homogeneous_part(1);
    higher.push_back(h.truncated(bound));
  }
  auto times_a_inv = [&](const std::vector<Polynomial<K>>& v) {
    std::vector<Polynomial<K>> out(s, Polynomial<K>(ring));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        if (!(*a_inv)(i, j).is_zero()) out[i] += v[j] * (*a_inv)(i, j);
    return out;
  };

  std::vector<Polynomial<K>> x;
  for (std::size_t i = 0; i < s; ++i) x.push_back(Polynomial<K>::variable(ring, i));
  std::vector<Polynomial<K>> g = times_a_inv(x);
  for (unsigned step = 2; step < bound; ++step) {
    std::vector<Polynomial<K>> rhs = x;
    for (std::size_t i = 0; i < s; ++i) rhs[i] -= higher[i].substitute(std::span(g), bound);
    g = times_a_inv(rhs);
  }
  for (auto& c : g) c = c.truncated(bound);
  return FormalMap<K>(std::move(g));
}

}  // namespace detloci
