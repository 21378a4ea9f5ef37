#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detloci/error.hpp"
#include "detloci/linalg.hpp"
#include "detloci/minors.hpp"
#include "detloci/polynomial.hpp"

namespace detloci {

/// Row-major matrix of polynomials sharing one ring.
template <ScalarField K>
class PolyMatrix {
 public:
  using Poly = Polynomial<K>;

  PolyMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {}

  PolyMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols, std::vector<Poly> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
      throw InputError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                       std::to_string(rows * cols) + " entries, got " + std::to_string(entries_.size()));
    for (const auto& e : entries_)
      if (!e.same_ring(Poly(ring_))) throw InputError("matrix entries must share the matrix ring");
  }

  static PolyMatrix identity(RingPtr<K> ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(ring, 1);
    return m;
  }

  const RingPtr<K>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Poly>& entries() const { return entries_; }

  Poly& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_)
      throw InputError("cannot multiply " + a.shape_string() + " by " + b.shape_string());
    PolyMatrix r(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix<K> evaluate(std::span<const K> point) const {
    DenseMatrix<K> m(rows_, cols_, ring_->scalars);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
    return m;
  }

  PolyMatrix substitute(std::span<const Poly> images, unsigned degree_bound = 0) const {
    if (images.empty() && ring_->nvars() != 0) throw InputError("substitution needs one image per variable");
    RingPtr<K> target = images.empty() ? ring_ : images.front().ring();
    PolyMatrix r(target, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].substitute(images, degree_bound);
    return r;
  }

  PolyMatrix truncated(unsigned degree_bound) const {
    PolyMatrix r = *this;
    for (auto& e : r.entries_) e = e.truncated(degree_bound);
    return r;
  }

  PolyMatrix homogeneous_part(unsigned degree) const {
    PolyMatrix r = *this;
    for (auto& e : r.entries_) e = e.homogeneous_part(degree);
    return r;
  }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
      out += "]\n";
    }
    return out;
  }

 private:
  RingPtr<K> ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> entries_;
};

/// Matrix of the direct-sum map: [[a, 0], [0, b]].
template <ScalarField K>
PolyMatrix<K> block_diagonal(const PolyMatrix<K>& a, const PolyMatrix<K>& b) {
  if (!(*a.ring() == *b.ring())) throw InputError("block_diagonal: blocks live in different rings");
  PolyMatrix<K> m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

template <ScalarField K>
std::vector<Polynomial<K>> minors_of_size(const PolyMatrix<K>& m, int r) {
  return minors_of_size<Polynomial<K>>(std::span(m.entries()), m.rows(), m.cols(), r, Polynomial<K>(m.ring()),
                                       Polynomial<K>::constant(m.ring(), 1));
}

template <ScalarField K>
std::vector<K> minors_of_size(const DenseMatrix<K>& m, int r) {
  return minors_of_size<K>(std::span(m.data()), m.rows(), m.cols(), r, zero_of<K>(m.context()),
                           one_of<K>(m.context()));
}

}  // namespace detloci
