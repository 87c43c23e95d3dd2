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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "lqc/ff.hpp"

namespace lqc {

/// Dense matrix over F_p with canonical uint32 entries.
class FpMatrix {
 public:
  FpMatrix(PrimeModulus m, std::size_t rows, std::size_t cols)
      : m_(m), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(PrimeModulus m, std::size_t n);
  // Entries are reduced into [0, p).
  static FpMatrix from_rows(PrimeModulus m, const std::vector<std::vector<std::int64_t>>& rows);

  PrimeModulus modulus() const noexcept { return m_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }
  FieldElem entry(std::size_t r, std::size_t c) const {
    return FieldElem::from_canonical((*this)(r, c), m_);
  }

  void append_row(const std::vector<std::uint32_t>& values);
  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& o) const;
  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.m_ == b.m_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Row echelon form in place; returns the pivot column of each nonzero row.
  /// With reduced = true the pivots are 1 and cleared above as well.
  /// Stops once stop_rank pivots are found.
  std::vector<std::size_t> eliminate(bool reduced,
                                     std::size_t stop_rank = std::numeric_limits<std::size_t>::max());

  std::size_t rank() const;
  /// Basis of {v : A v = 0} as the rows of the result (one per free column).
  FpMatrix right_kernel() const;
  /// Basis of {v : v A = 0}.
  FpMatrix left_kernel() const { return transpose().right_kernel(); }
  FieldElem det() const;

 private:
  PrimeModulus m_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Incrementally built row space with a fixed column count. Rows are kept
/// in reduced echelon form so membership and normal forms are cheap.
class RowSpace {
 public:
  RowSpace(PrimeModulus m, std::size_t cols) : m_(m), cols_(cols) {}

  std::size_t dim() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const std::vector<std::vector<std::uint32_t>>& basis() const noexcept { return rows_; }

  /// Reduce v against the basis in place; returns true if v becomes zero.
  bool reduce(std::vector<std::uint32_t>& v) const;
  /// Adds v if independent; returns whether the dimension grew.
  bool insert(std::vector<std::uint32_t> v);
  bool contains(std::vector<std::uint32_t> v) const { return reduce(v); }

 private:
  PrimeModulus m_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

namespace detail {

// a[j] <- a[j] - c * b[j] over [begin, end).
void axpy_neg(std::uint32_t* a, const std::uint32_t* b, std::uint32_t c, std::size_t begin,
              std::size_t end, PrimeModulus m);
// a[j] <- c * a[j].
void scale(std::uint32_t* a, std::uint32_t c, std::size_t begin, std::size_t end, PrimeModulus m);

}  // namespace detail

}  // namespace lqc
