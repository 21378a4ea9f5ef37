#pragma once

// r x r minors of a matrix over any commutative ring type.
//
// Conventions for out-of-range sizes: r <= 0 gives the single minor 1 (unit
// ideal), r > min(rows, cols) gives no minors (zero ideal). Minors are listed
// in lexicographic order of (row set, column set).

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "detloci/error.hpp"

namespace detloci {

/// All r-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace detail {

/// Laplace expansion along the first row of the row set, memoized on
/// (row set, column set) bitmasks so shared sub-minors are computed once.
template <class T>
class MinorEngine {
 public:
  MinorEngine(std::span<const T> entries, std::size_t rows, std::size_t cols, T zero, T one)
      : entries_(entries), rows_(rows), cols_(cols), zero_(std::move(zero)), one_(std::move(one)) {
    if (rows > 32 || cols > 32) throw InputError("minor enumeration supports at most 32 rows and columns");
  }

  T det(std::uint32_t rowmask, std::uint32_t colmask) {
    if (rowmask == 0) return one_;
    std::uint64_t key = (std::uint64_t{rowmask} << 32) | colmask;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::size_t r0 = static_cast<std::size_t>(__builtin_ctz(rowmask));
    std::uint32_t rest = rowmask & (rowmask - 1);
    T total = zero_;
    bool negative = false;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(colmask >> c & 1u)) continue;
      const T& entry = entries_[r0 * cols_ + c];
      if (!entry.is_zero()) {
        T term = entry * det(rest, colmask & ~(std::uint32_t{1} << c));
        if (negative)
          total -= term;
        else
          total += term;
      }
      negative = !negative;
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  std::span<const T> entries_;
  std::size_t rows_, cols_;
  T zero_, one_;
  std::unordered_map<std::uint64_t, T> memo_;
};

inline std::uint32_t to_mask(const std::vector<std::size_t>& s) {
  std::uint32_t m = 0;
  for (auto i : s) m |= std::uint32_t{1} << i;
  return m;
}

}  // namespace detail

/// entries is row-major rows x cols.
template <class T>
std::vector<T> minors_of_size(std::span<const T> entries, std::size_t rows, std::size_t cols, int r, const T& zero,
                              const T& one) {
  if (entries.size() != rows * cols) throw InputError("entry count does not match matrix shape");
  if (r <= 0) return {one};
  auto size = static_cast<std::size_t>(r);
  if (size > rows || size > cols) return {};
  detail::MinorEngine<T> engine(entries, rows, cols, zero, one);
  auto row_sets = subsets_of_size(rows, size);
  auto col_sets = subsets_of_size(cols, size);
  std::vector<T> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets) {
    std::uint32_t rm = detail::to_mask(rs);
    for (const auto& cs : col_sets) out.push_back(engine.det(rm, detail::to_mask(cs)));
  }
  return out;
}

}  // namespace detloci
