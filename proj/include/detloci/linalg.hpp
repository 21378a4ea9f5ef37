#pragma once

// Dense matrices over an exact field and the Gaussian-elimination kernels
// (rank, reduced row echelon form, kernel, solve, determinant, inverse).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detloci/error.hpp"
#include "detloci/scalar.hpp"

namespace detloci {

template <ScalarField K>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, typename K::Context ctx = {})
      : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, zero_of<K>(ctx)) {}

  static DenseMatrix identity(std::size_t n, typename K::Context ctx = {}) {
    DenseMatrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_of<K>(ctx);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const typename K::Context& context() const { return ctx_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<K>& data() const { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    DenseMatrix r(a.rows_, b.cols_, a.ctx_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
    std::vector<K> out(rows_, zero_of<K>(ctx_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_, ctx_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  struct Echelon {
    DenseMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  };

  /// Reduced row echelon form; only the first pivot_limit columns may hold
  /// pivots (the rest are carried along, as for augmented systems).
  Echelon rref(std::size_t pivot_limit = static_cast<std::size_t>(-1)) const {
    DenseMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < std::min(cols_, pivot_limit) && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && m(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(row, j));
      K inv = m(row, col).inverse();
      for (std::size_t j = col; j < cols_; ++j) m(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || m(i, col).is_zero()) continue;
        K f = m(i, col);
        for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank() const { return rref().pivots.size(); }

  /// Basis of {v : A v = 0}, one vector per free column.
  std::vector<std::vector<K>> kernel() const {
    auto [m, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<K> v(cols_, zero_of<K>(ctx_));
      v[free] = one_of<K>(ctx_);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Some solution of A x = b, or nullopt when b is outside the column span.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    if (b.size() != rows_) throw InputError("right-hand side length mismatch");
    DenseMatrix aug(rows_, cols_ + 1, ctx_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto [m, pivots] = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<K> x(cols_, zero_of<K>(ctx_));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m(r, cols_);
    return x;
  }

  /// solve() for several right-hand sides with one elimination.
  std::vector<std::optional<std::vector<K>>> solve_all(const std::vector<std::vector<K>>& bs) const {
    DenseMatrix aug(rows_, cols_ + bs.size(), ctx_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    for (std::size_t t = 0; t < bs.size(); ++t) {
      if (bs[t].size() != rows_) throw InputError("right-hand side length mismatch");
      for (std::size_t i = 0; i < rows_; ++i) aug(i, cols_ + t) = bs[t][i];
    }
    auto [m, pivots] = aug.rref(cols_);
    std::vector<std::optional<std::vector<K>>> out;
    for (std::size_t t = 0; t < bs.size(); ++t) {
      bool consistent = true;
      for (std::size_t r = pivots.size(); r < rows_ && consistent; ++r)
        if (!m(r, cols_ + t).is_zero()) consistent = false;
      if (!consistent) {
        out.emplace_back(std::nullopt);
        continue;
      }
      std::vector<K> x(cols_, zero_of<K>(ctx_));
      for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m(r, cols_ + t);
      out.emplace_back(std::move(x));
    }
    return out;
  }

  K determinant() const {
    if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
    DenseMatrix m = *this;
    K det = one_of<K>(ctx_);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t sel = col;
      while (sel < rows_ && m(sel, col).is_zero()) ++sel;
      if (sel == rows_) return zero_of<K>(ctx_);
      if (sel != col) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(col, j));
        det = -det;
      }
      det *= m(col, col);
      K inv = m(col, col).inverse();
      for (std::size_t i = col + 1; i < rows_; ++i) {
        if (m(i, col).is_zero()) continue;
        K f = m(i, col) * inv;
        for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return det;
  }

  std::optional<DenseMatrix> inverse() const {
    if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
    std::size_t n = rows_;
    DenseMatrix aug(n, 2 * n, ctx_);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = one_of<K>(ctx_);
    }
    auto [m, pivots] = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    DenseMatrix inv(n, n, ctx_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
    return inv;
  }

 private:
  std::size_t rows_, cols_;
  typename K::Context ctx_;
  std::vector<K> data_;
};

}  // namespace detloci
