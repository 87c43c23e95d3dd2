/*
 * Copyright 2026 The lqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <concepts>
#include <span>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lqc/ff.hpp"
#include "lqc/poly.hpp"

namespace lqc {

template <class R>
concept CommutativeRing = requires(const R& a, const R& b, typename R::context_type ctx) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.context() } -> std::convertible_to<typename R::context_type>;
  { R::zero(ctx) } -> std::convertible_to<R>;
  { R::one(ctx) } -> std::convertible_to<R>;
};

template <class R>
inline constexpr bool is_field_v = false;
template <>
inline constexpr bool is_field_v<FieldElem> = true;

/// Dense row-major matrix over a commutative ring. Indices are 0-based here;
/// the deletion helpers in pfaffian.hpp take 1-based index sets.
template <CommutativeRing R>
class Matrix {
 public:
  using value_type = R;
  using context_type = typename R::context_type;

  Matrix(context_type ctx, std::size_t rows, std::size_t cols)
      : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, R::zero(ctx)) {}

  static Matrix identity(context_type ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R::one(ctx);
    return m;
  }

  static Matrix from_rows(context_type ctx, const std::vector<std::vector<R>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(ctx, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  context_type context() const noexcept { return ctx_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  // Square, A^T = -A, and an explicitly zero diagonal.
  bool is_skew_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!(*this)(i, i).is_zero()) return false;
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
    return true;
  }

  std::size_t nonzeros_in_column(std::size_t c) const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows_; ++r) n += !(*this)(r, c).is_zero();
    return n;
  }

  Matrix transpose() const {
    Matrix t(ctx_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] = s.data_[k] + o.data_[k];
    return s;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] = s.data_[k] - o.data_[k];
    return s;
  }

  Matrix operator-() const {
    Matrix s = *this;
    for (auto& e : s.data_) e = -e;
    return s;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const R& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const R& b = o(k, j);
          if (!b.is_zero()) p(i, j) = p(i, j) + a * b;
        }
      }
    return p;
  }

  Matrix scaled(const R& s) const {
    Matrix m = *this;
    for (auto& e : m.data_) e = e * s;
    return m;
  }

  // Copy of the nr x nc block with top-left corner (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
    Matrix b(ctx_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block outside matrix");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  context_type ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<R> data_;
};

/// [[a, b], [c, d]] with compatible block shapes.
template <CommutativeRing R>
Matrix<R> block2x2(const Matrix<R>& a, const Matrix<R>& b, const Matrix<R>& c, const Matrix<R>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw std::invalid_argument("incompatible block shapes");
  Matrix<R> m(a.context(), a.rows() + c.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

/// [[0, M], [-M^T, 0]] for any (possibly non-square) M.
template <CommutativeRing R>
Matrix<R> block_skew(const Matrix<R>& M) {
  const auto ctx = M.context();
  return block2x2(Matrix<R>(ctx, M.rows(), M.rows()), M, -M.transpose(),
                  Matrix<R>(ctx, M.cols(), M.cols()));
}

using PolyMatrix = Matrix<Poly>;
using FieldMatrix = Matrix<FieldElem>;

/// Entrywise evaluation of a polynomial matrix at a point of F_p^n.
FieldMatrix evaluate(const PolyMatrix& m, std::span<const FieldElem> point);

}  // namespace lqc
