#pragma once

// Sparse multivariate polynomials over an exact scalar field.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detloci/error.hpp"
#include "detloci/scalar.hpp"

namespace detloci {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically with x1 > x2 > ... .
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Variable names plus the scalar field they are polynomials over.
template <ScalarField K>
struct PolyRing {
  std::vector<std::string> vars;
  typename K::Context scalars{};

  std::size_t nvars() const { return vars.size(); }
  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

template <ScalarField K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <ScalarField K>
RingPtr<K> make_ring(std::vector<std::string> vars, typename K::Context ctx = {}) {
  return std::make_shared<const PolyRing<K>>(PolyRing<K>{std::move(vars), ctx});
}

/// {prefix}1, ..., {prefix}n
inline std::vector<std::string> numbered_vars(const std::string& prefix, std::size_t n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

template <ScalarField K>
class Polynomial {
 public:
  using Scalar = K;
  using TermMap = std::map<Exponents, K, GrlexGreater>;

  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {
    if (!ring_) throw InputError("polynomial without a ring");
  }

  static Polynomial constant(RingPtr<K> ring, const K& c) {
    Polynomial p(std::move(ring));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }
  static Polynomial constant(RingPtr<K> ring, long c) {
    auto ctx = ring->scalars;
    return constant(std::move(ring), K::from_int(ctx, c));
  }
  static Polynomial variable(RingPtr<K> ring, std::size_t i) {
    if (i >= ring->nvars()) throw InputError("variable index out of range");
    Exponents e(ring->nvars(), 0);
    e[i] = 1;
    K one = one_of<K>(ring->scalars);
    return monomial(std::move(ring), std::move(e), one);
  }
  static Polynomial monomial(RingPtr<K> ring, Exponents e, const K& c) {
    Polynomial p(std::move(ring));
    p.add_term(std::move(e), c);
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->nvars(); }
  const typename K::Context& scalars() const { return ring_->scalars; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && detloci::total_degree(terms_.begin()->first) == 0);
  }
  /// -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(detloci::total_degree(terms_.begin()->first)); }
  /// Smallest degree of a term; -1 for zero.
  int order() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
      int d = static_cast<int>(detloci::total_degree(e));
      if (best < 0 || d < best) best = d;
    }
    return best;
  }

  K coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_of<K>(scalars()) : it->second;
  }
  K constant_term() const { return coefficient(Exponents(nvars(), 0)); }

  /// Adds c·x^e, dropping the term if the coefficient cancels.
  void add_term(Exponents e, const K& c) {
    if (e.size() != nvars()) throw InputError("exponent vector length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const K& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b, 0); }
  friend Polynomial operator*(Polynomial a, const K& s) { return a *= s; }
  friend Polynomial operator*(const K& s, Polynomial a) { return a *= s; }

  /// Product with every term of total degree >= degree_bound dropped;
  /// degree_bound == 0 means no truncation.
  static Polynomial multiply(const Polynomial& a, const Polynomial& b, unsigned degree_bound) {
    a.require_same_ring(b);
    Polynomial r(a.ring_);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        if (degree_bound && detloci::total_degree(e) >= degree_bound) continue;
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  Polynomial pow(unsigned n, unsigned degree_bound = 0) const {
    Polynomial result = constant(ring_, 1).truncated(degree_bound);
    for (unsigned i = 0; i < n; ++i) result = multiply(result, *this, degree_bound);
    return result;
  }

  K evaluate(std::span<const K> point) const {
    if (point.size() != nvars())
      throw InputError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                       std::to_string(nvars()));
    K total = zero_of<K>(scalars());
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      total += t;
    }
    return total;
  }

  /// Replaces x_i by images[i]; the result lives in the images' ring.
  /// degree_bound > 0 truncates every intermediate product.
  Polynomial substitute(std::span<const Polynomial> images, unsigned degree_bound = 0) const {
    if (images.size() != nvars()) throw InputError("substitution needs one image per variable");
    if (images.empty()) return constant(ring_, constant_term());
    const RingPtr<K>& target = images.front().ring();
    // powers[i][k] = images[i]^k, built lazily
    std::vector<std::vector<Polynomial>> powers(nvars());
    auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
      auto& ps = powers[i];
      if (ps.empty()) ps.push_back(constant(target, 1));
      while (ps.size() <= k) ps.push_back(multiply(ps.back(), images[i], degree_bound));
      return ps[k];
    };
    Polynomial result(target);
    for (const auto& [e, c] : terms_) {
      Polynomial t = constant(target, c);
      for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i)
        if (e[i]) t = multiply(t, power(i, e[i]), degree_bound);
      result += t;
    }
    return degree_bound ? result.truncated(degree_bound) : result;
  }

  /// Drops all terms of total degree >= degree_bound (0 keeps everything).
  Polynomial truncated(unsigned degree_bound) const {
    if (degree_bound == 0) return *this;
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_)
      if (detloci::total_degree(e) < degree_bound) r.terms_.emplace(e, c);
    return r;
  }

  Polynomial homogeneous_part(unsigned degree) const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_)
      if (detloci::total_degree(e) == degree) r.terms_.emplace(e, c);
    return r;
  }

  /// Same polynomial viewed in another ring with the same variable count.
  Polynomial in_ring(RingPtr<K> other) const {
    if (other->nvars() != nvars()) throw InputError("ring change must preserve the variable count");
    Polynomial r(std::move(other));
    r.terms_ = terms_;
    return r;
  }

  bool same_ring(const Polynomial& o) const { return ring_ == o.ring_ || *ring_ == *o.ring_; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.same_ring(b) && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string coeff = c.to_string();
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->vars[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += coeff;
      else if (coeff == "1")
        out += mono;
      else
        out += coeff + "*" + mono;
    }
    return out;
  }

 private:
  void require_same_ring(const Polynomial& o) const {
    if (!same_ring(o)) throw InputError("polynomials live in different rings");
  }

  RingPtr<K> ring_;
  TermMap terms_;
};

}  // namespace detloci
