// Copyright 2026 The weylkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact dense linear algebra over Q(i): reduced row echelon form, rank,
// kernels and consistent solves. Elimination skips zero entries, which is
// what keeps the (very sparse) structure-constant systems cheap.

#ifndef WEYLKIT_LINALG_HPP_
#define WEYLKIT_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weylkit/scalar.hpp"

namespace weylkit {

using Vector = std::vector<GaussianRational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Builds a matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(std::size_t rows, std::span<const Vector> cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InputError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector apply(std::span<const GaussianRational> x) const {
    if (x.size() != cols_) throw InputError("vector length mismatch");
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !x[j].is_zero())
          y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row r, r < rank
};

namespace detail {

// Gauss-Jordan elimination restricted to the first `elim_cols` columns; the
// remaining columns ride along (used for augmented systems).
inline RowEchelon eliminate(Matrix m, std::size_t elim_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t cols = m.cols();
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < elim_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    GaussianRational inv = GaussianRational(1) / m(r, c);
    nz.clear();
    for (std::size_t j = 0; j < cols; ++j) {
      if (m(r, j).is_zero()) continue;
      m(r, j) *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      GaussianRational f = m(i, c);
      for (std::size_t j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace detail

inline RowEchelon rref(Matrix m) {
  std::size_t c = m.cols();
  return detail::eliminate(std::move(m), c);
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// Rank of a family of vectors of common length `dim`.
inline std::size_t rank_of(std::span<const Vector> vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(dim, vectors));
}

// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vector> nullspace(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Factors A once so that many right-hand sides can be solved exactly.
// Internally reduces [A | I] and keeps the accumulated row transform.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& a) : rows_(a.rows()), cols_(a.cols()) {
    Matrix aug(rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = a(i, j);
      aug(i, cols_ + i) = 1;
    }
    echelon_ = detail::eliminate(std::move(aug), cols_);
  }

  std::size_t rank() const { return echelon_.pivots.size(); }
  std::size_t nullity() const { return cols_ - rank(); }

  // Some x with A x = b, or nullopt when b is outside the column space.
  std::optional<Vector> solve(std::span<const GaussianRational> b) const {
    if (b.size() != rows_) throw InputError("rhs length mismatch");
    const Matrix& m = echelon_.reduced;
    Vector tb(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < rows_; ++k)
        if (!b[k].is_zero() && !m(i, cols_ + k).is_zero())
          tb[i] += m(i, cols_ + k) * b[k];
    for (std::size_t i = rank(); i < rows_; ++i)
      if (!tb[i].is_zero()) return std::nullopt;
    Vector x(cols_);
    for (std::size_t r = 0; r < rank(); ++r) x[echelon_.pivots[r]] = tb[r];
    return x;
  }

  std::vector<Vector> kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : echelon_.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vector v(cols_);
      v[free] = 1;
      for (std::size_t r = 0; r < rank(); ++r)
        v[echelon_.pivots[r]] = -echelon_.reduced(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  RowEchelon echelon_;
};

}  // namespace weylkit

#endif  // WEYLKIT_LINALG_HPP_
