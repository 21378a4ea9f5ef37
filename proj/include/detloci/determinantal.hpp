#pragma once

// Generic b x a matrices, the determinantal ideals J_k(a, b) generated by
// their (a-k+1)-minors, the rank strata M_k = {rank <= a-k}, and finite-field
// point counts of those strata.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "detloci/error.hpp"
#include "detloci/poly_matrix.hpp"
#include "detloci/scalar.hpp"

namespace detloci {

/// Matrix shape b x a with 1 <= a <= b; constructing with a > b transposes.
class GenericShape {
 public:
  GenericShape(int a, int b) {
    if (a < 1 || b < 1)
      throw InputError("matrix dimensions must be positive, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    a_ = std::min(a, b);
    b_ = std::max(a, b);
  }
  int a() const { return a_; }  // columns
  int b() const { return b_; }  // rows
  int ambient_dimension() const { return a_ * b_; }
  bool is_square() const { return a_ == b_; }
  friend bool operator==(const GenericShape&, const GenericShape&) = default;

 private:
  int a_, b_;
};

inline std::string generic_entry_name(int row, int col, bool wide) {
  return wide ? "x" + std::to_string(row) + "_" + std::to_string(col)
              : "x" + std::to_string(row) + std::to_string(col);
}

/// Variables x_{ij}, row-major over 1 <= i <= b, 1 <= j <= a.
inline std::vector<std::string> generic_variable_names(const GenericShape& shape) {
  bool wide = shape.a() > 9 || shape.b() > 9;
  std::vector<std::string> names;
  for (int i = 1; i <= shape.b(); ++i)
    for (int j = 1; j <= shape.a(); ++j) names.push_back(generic_entry_name(i, j, wide));
  return names;
}

template <ScalarField K = Rational>
PolyMatrix<K> generic_matrix(const GenericShape& shape, typename K::Context ctx = {}) {
  auto ring = make_ring<K>(generic_variable_names(shape), ctx);
  std::vector<Polynomial<K>> entries;
  for (std::size_t v = 0; v < ring->nvars(); ++v) entries.push_back(Polynomial<K>::variable(ring, v));
  return PolyMatrix<K>(ring, static_cast<std::size_t>(shape.b()), static_cast<std::size_t>(shape.a()),
                       std::move(entries));
}

template <ScalarField K = Rational>
struct DeterminantalIdeal {
  GenericShape shape;
  int k;
  int minor_size;  // a - k + 1
  std::vector<Polynomial<K>> generators;
};

inline BigInt binomial(long n, long r) {
  if (r < 0 || r > n || n < 0) return 0;
  BigInt result = 1;
  for (long i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

/// J_k(a, b); k <= 0 gives the zero ideal (no generators), k >= a+1 the unit ideal.
template <ScalarField K = Rational>
DeterminantalIdeal<K> determinantal_ideal(const GenericShape& shape, int k, typename K::Context ctx = {}) {
  int size = shape.a() - k + 1;
  auto x = generic_matrix<K>(shape, ctx);
  return {shape, k, size, minors_of_size(x, size)};
}

/// Expected generator count of J_k for 1 <= k <= a.
inline BigInt determinantal_generator_count(const GenericShape& shape, int k) {
  long size = shape.a() - k + 1;
  return binomial(shape.b(), size) * binomial(shape.a(), size);
}

inline void require_stratum_index(const GenericShape& shape, int k) {
  if (k < 1 || k > shape.a())
    throw InputError("stratum index k=" + std::to_string(k) + " out of range 1.." + std::to_string(shape.a()));
}

/// dim M_k = (a-k)(b+k).
inline long stratum_dimension(const GenericShape& shape, int k) {
  require_stratum_index(shape, k);
  return static_cast<long>(shape.a() - k) * (shape.b() + k);
}

inline long stratum_codimension(const GenericShape& shape, int k) {
  return shape.ambient_dimension() - stratum_dimension(shape, k);
}

struct SingularLocus {
  int index;   // the singular locus of M_k is M_{k+1}
  bool empty;  // M_{a+1} is empty
};

inline SingularLocus singular_locus_index(const GenericShape& shape, int k) {
  require_stratum_index(shape, k);
  return {k + 1, k + 1 > shape.a()};
}

namespace detail {

inline BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

inline void require_prime_modulus(long q) {
  if (q < 2 || !is_prime(static_cast<std::uint64_t>(q)))
    throw InputError("point counts are implemented for prime q only, got q=" + std::to_string(q));
}

inline void require_rank_bound(const GenericShape& shape, int r) {
  if (r < 0 || r > shape.a())
    throw InputError("rank bound r=" + std::to_string(r) + " out of range 0.." + std::to_string(shape.a()));
}

/// Rank of a small matrix over F_q, q prime, entries already reduced.
inline int rank_mod(std::vector<long> m, int rows, int cols, long q) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = rank;
    while (sel < rows && m[sel * cols + col] == 0) ++sel;
    if (sel == rows) continue;
    for (int j = 0; j < cols; ++j) std::swap(m[sel * cols + j], m[rank * cols + j]);
    long inv = 1;
    for (long t = 1; t < q; ++t)
      if (m[rank * cols + col] * t % q == 1) {
        inv = t;
        break;
      }
    for (int i = rank + 1; i < rows; ++i) {
      long f = m[i * cols + col] * inv % q;
      if (!f) continue;
      for (int j = col; j < cols; ++j) m[i * cols + j] = ((m[i * cols + j] - f * m[rank * cols + j]) % q + q) % q;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Number of b x a matrices over F_q of rank exactly j:
/// prod_{i<j} (q^a - q^i)(q^b - q^i) / prod_{i<j} (q^j - q^i).
inline BigInt count_points_rank_eq(const GenericShape& shape, int j, long q) {
  detail::require_prime_modulus(q);
  detail::require_rank_bound(shape, j);
  BigInt qa = detail::ipow(q, shape.a()), qb = detail::ipow(q, shape.b()), qj = detail::ipow(q, j);
  BigInt num = 1, den = 1, qi = 1;
  for (int i = 0; i < j; ++i) {
    num *= (qa - qi) * (qb - qi);
    den *= qj - qi;
    qi *= q;
  }
  return num / den;
}

/// |{A in F_q^{b x a} : rank A <= r}| = |M_{a-r}(F_q)|.
inline BigInt count_points_rank_le(const GenericShape& shape, int r, long q) {
  detail::require_rank_bound(shape, r);
  BigInt total = 0;
  for (int j = 0; j <= r; ++j) total += count_points_rank_eq(shape, j, q);
  return total;
}

inline constexpr long kBruteForceLimit = 1L << 20;

/// Exhaustive enumeration; refuses when q^(ab) exceeds 2^20.
inline BigInt count_points_brute_force(const GenericShape& shape, int r, long q) {
  detail::require_prime_modulus(q);
  detail::require_rank_bound(shape, r);
  int n = shape.ambient_dimension();
  BigInt space = detail::ipow(q, static_cast<unsigned>(n));
  if (space > kBruteForceLimit)
    throw InputError("brute-force count refused: q^(ab) = " + space.str() + " exceeds 2^20");
  long total = space.convert_to<long>();
  std::vector<long> m(static_cast<std::size_t>(n), 0);
  long count = 0;
  for (long idx = 0; idx < total; ++idx) {
    long v = idx;
    for (int t = 0; t < n; ++t) {
      m[static_cast<std::size_t>(t)] = v % q;
      v /= q;
    }
    if (detail::rank_mod(m, shape.b(), shape.a(), q) <= r) ++count;
  }
  return count;
}

/// The first n primes.
inline std::vector<long> first_primes(std::size_t n) {
  std::vector<long> ps;
  for (long c = 2; ps.size() < n; ++c)
    if (is_prime(static_cast<std::uint64_t>(c))) ps.push_back(c);
  return ps;
}

/// Coefficients (constant first) of the polynomial P with
/// P(q) = count_points_rank_le(shape, r, q), recovered by Newton interpolation
/// at the first ab+1 primes. The count is a polynomial in q of degree <= ab,
/// so ab+1 nodes determine it.
inline std::vector<Rational> rank_count_polynomial(const GenericShape& shape, int r) {
  auto nodes = first_primes(static_cast<std::size_t>(shape.ambient_dimension()) + 1);
  std::size_t n = nodes.size();
  std::vector<Rational> dd;
  for (long q : nodes) dd.emplace_back(count_points_rank_le(shape, r, q));
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(nodes[i] - nodes[i - level]);
  // expand the Newton form into monomial coefficients
  std::vector<Rational> coeffs(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    // coeffs = coeffs * (q - nodes[i]) + dd[i]
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t d = 0; d + 1 < n; ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * Rational(nodes[i]);
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

/// Degree of a coefficient vector (constant first); -1 for zero.
inline int polynomial_degree(const std::vector<Rational>& coeffs) {
  for (std::size_t d = coeffs.size(); d-- > 0;)
    if (!coeffs[d].is_zero()) return static_cast<int>(d);
  return -1;
}

}  // namespace detloci
