#pragma once

// Cohomology jump ideals of bounded complexes of free modules over a
// polynomial ring:
//
//   J^i_k = ideal of minors of size rank(F^i) - k + 1 of d^{i-1} (+) d^i,
//
// where d^{i-1} (+) d^i is the block-diagonal matrix of the direct-sum map
// F^{i-1} (+) F^i -> F^i (+) F^{i+1}. At a point p the vanishing of J^i_k is
// equivalent to dim H^i(F (x) k(p)) >= k.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detloci/error.hpp"
#include "detloci/poly_matrix.hpp"

namespace detloci {

/// F^{min} -> F^{min+1} -> ... ; differentials[t] is d^{min+t}, of shape
/// ranks[t+1] x ranks[t]. Modules outside the listed range are zero.
template <ScalarField K>
class FreeComplex {
 public:
  FreeComplex(RingPtr<K> ring, int min_degree, std::vector<std::size_t> ranks, std::vector<PolyMatrix<K>> differentials)
      : ring_(std::move(ring)), min_degree_(min_degree), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
    if (ranks_.empty()) throw InputError("complex needs at least one module");
    std::size_t expected = ranks_.size() - 1;
    if (diffs_.size() != expected)
      throw InputError("complex with " + std::to_string(ranks_.size()) + " modules needs " + std::to_string(expected) +
                       " differentials, got " + std::to_string(diffs_.size()));
    for (std::size_t t = 0; t < diffs_.size(); ++t) {
      const auto& d = diffs_[t];
      if (d.rows() != ranks_[t + 1] || d.cols() != ranks_[t])
        throw InputError("d^" + std::to_string(min_degree_ + static_cast<int>(t)) + " has shape " + d.shape_string() +
                         ", expected " + std::to_string(ranks_[t + 1]) + "x" + std::to_string(ranks_[t]));
      if (!(*d.ring() == *ring_)) throw InputError("differentials must share the complex ring");
    }
  }

  const RingPtr<K>& ring() const { return ring_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(ranks_.size()) - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::vector<PolyMatrix<K>>& differentials() const { return diffs_; }

  std::size_t rank(int degree) const {
    if (degree < min_degree_ || degree > max_degree()) return 0;
    return ranks_[static_cast<std::size_t>(degree - min_degree_)];
  }

  /// d^i : F^i -> F^{i+1}; a zero matrix of the right shape when out of range.
  PolyMatrix<K> differential(int degree) const {
    if (degree >= min_degree_ && degree < max_degree()) return diffs_[static_cast<std::size_t>(degree - min_degree_)];
    return PolyMatrix<K>(ring_, rank(degree + 1), rank(degree));
  }

 private:
  RingPtr<K> ring_;
  int min_degree_;
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix<K>> diffs_;
};

struct ComplexDiagnostics {
  bool valid = true;
  std::string message;  // names the first failing entry
};

/// Checks d^{i+1} d^i = 0 exactly for every i.
template <ScalarField K>
ComplexDiagnostics validate_complex(const FreeComplex<K>& c) {
  for (int i = c.min_degree(); i + 1 < c.max_degree(); ++i) {
    auto prod = c.differential(i + 1) * c.differential(i);
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t col = 0; col < prod.cols(); ++col)
        if (!prod(r, col).is_zero())
          return {false, "d^" + std::to_string(i + 1) + " * d^" + std::to_string(i) + " has nonzero entry (" +
                             std::to_string(r + 1) + "," + std::to_string(col + 1) + ") = " + prod(r, col).to_string()};
  }
  return {};
}

template <ScalarField K>
struct JumpIdeal {
  int degree;
  int k;
  int minor_size;
  std::vector<Polynomial<K>> generators;  // nonzero minors; [1] is the unit ideal, [] the zero ideal

  bool is_unit() const { return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero(); }
  bool is_zero() const { return generators.empty(); }
};

template <ScalarField K>
PolyMatrix<K> jump_matrix(const FreeComplex<K>& c, int i) {
  return block_diagonal(c.differential(i - 1), c.differential(i));
}

template <ScalarField K>
JumpIdeal<K> jump_ideal(const FreeComplex<K>& c, int i, int k) {
  auto diag = validate_complex(c);
  if (!diag.valid) throw InputError("not a complex: " + diag.message);
  int size = static_cast<int>(c.rank(i)) - k + 1;
  JumpIdeal<K> j{i, k, size, {}};
  for (auto& m : minors_of_size(jump_matrix(c, i), size))
    if (!m.is_zero()) j.generators.push_back(std::move(m));
  return j;
}

/// dim H^i of the complex specialized at a point.
template <ScalarField K>
std::size_t cohomology_dimension_at(const FreeComplex<K>& c, int i, std::span<const K> point) {
  std::size_t out = c.differential(i).evaluate(point).rank();
  std::size_t in = c.differential(i - 1).evaluate(point).rank();
  return c.rank(i) - out - in;
}

template <ScalarField K>
struct SpecializationViolation {
  std::vector<K> point;
  std::size_t cohomology_dimension;
  bool ideal_vanishes;
};

template <ScalarField K>
struct SpecializationReport {
  int degree;
  int k;
  std::size_t points_checked = 0;
  std::vector<SpecializationViolation<K>> violations;
  bool consistent() const { return violations.empty(); }
};

/// At each point: all generators of J^i_k vanish  <=>  h^i(p) >= k.
template <ScalarField K>
SpecializationReport<K> specialization_check(const FreeComplex<K>& c, int i, int k,
                                             const std::vector<std::vector<K>>& points) {
  auto ideal = jump_ideal(c, i, k);
  SpecializationReport<K> report{i, k, 0, {}};
  for (const auto& p : points) {
    bool vanishes = true;
    for (const auto& g : ideal.generators)
      if (!g.evaluate(p).is_zero()) {
        vanishes = false;
        break;
      }
    std::size_t h = cohomology_dimension_at(c, i, std::span<const K>(p));
    bool jumps = k <= 0 || h >= static_cast<std::size_t>(k);
    ++report.points_checked;
    if (vanishes != jumps) report.violations.push_back({p, h, vanishes});
  }
  return report;
}

}  // namespace detloci
