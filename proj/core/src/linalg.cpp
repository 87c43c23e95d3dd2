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

#include "lqc/linalg.hpp"

#include <stdexcept>

namespace lqc {

namespace detail {

void axpy_neg(std::uint32_t* a, const std::uint32_t* b, std::uint32_t c, std::size_t begin,
              std::size_t end, PrimeModulus m) {
  const std::uint64_t neg = c == 0 ? 0 : m.value() - c;
  for (std::size_t j = begin; j < end; ++j)
    if (b[j]) a[j] = m.reduce(a[j] + neg * b[j]);
}

void scale(std::uint32_t* a, std::uint32_t c, std::size_t begin, std::size_t end, PrimeModulus m) {
  for (std::size_t j = begin; j < end; ++j) a[j] = m.reduce(std::uint64_t{a[j]} * c);
}

}  // namespace detail

FpMatrix FpMatrix::identity(PrimeModulus m, std::size_t n) {
  FpMatrix a(m, n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

FpMatrix FpMatrix::from_rows(PrimeModulus m, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  FpMatrix a(m, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) a(i, j) = m.reduce_signed(rows[i][j]);
  }
  return a;
}

void FpMatrix::append_row(const std::vector<std::uint32_t>& values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(m_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  FpMatrix out(m_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out(i, j) = m_.reduce(out(i, j) + std::uint64_t{a} * o(k, j));
    }
  return out;
}

std::vector<std::size_t> FpMatrix::eliminate(bool reduced, std::size_t stop_rank) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_ && pivots.size() < stop_rank; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
    std::uint32_t* pr = row(r);
    if (pr[c] != 1) detail::scale(pr, inverse_mod(pr[c], m_.value()), c, cols_, m_);
    // The pivot row is zero before c; bound its support to skip trailing zeros.
    std::size_t end = cols_;
    while (end > c + 1 && pr[end - 1] == 0) --end;
    for (std::size_t i = reduced ? 0 : r + 1; i < rows_; ++i) {
      if (i == r) continue;
      std::uint32_t* ri = row(i);
      if (ri[c]) detail::axpy_neg(ri, pr, ri[c], c, end, m_);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix work = *this;
  return work.eliminate(false).size();
}

FpMatrix FpMatrix::right_kernel() const {
  FpMatrix work = *this;
  const auto pivots = work.eliminate(true);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMatrix ker(m_, cols_ - pivots.size(), cols_);
  std::size_t k = 0;
  for (std::size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    ker(k, fc) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const std::uint32_t v = work(r, fc);
      ker(k, pivots[r]) = v ? m_.value() - v : 0;
    }
    ++k;
  }
  return ker;
}

FieldElem FpMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  FpMatrix work = *this;
  FieldElem d = FieldElem::one(m_);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && work(piv, c) == 0) ++piv;
    if (piv == rows_) return FieldElem::zero(m_);
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(work(piv, j), work(c, j));
      d = -d;
    }
    d *= work.entry(c, c);
    const std::uint32_t inv = inverse_mod(work(c, c), m_.value());
    for (std::size_t i = c + 1; i < rows_; ++i) {
      const std::uint32_t f = m_.reduce(std::uint64_t{work(i, c)} * inv);
      if (f) detail::axpy_neg(work.row(i), work.row(c), f, c, cols_, m_);
    }
  }
  return d;
}

bool RowSpace::reduce(std::vector<std::uint32_t>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (v[c]) detail::axpy_neg(v.data(), rows_[k].data(), v[c], 0, cols_, m_);
  }
  for (auto e : v)
    if (e) return false;
  return true;
}

bool RowSpace::insert(std::vector<std::uint32_t> v) {
  if (reduce(v)) return false;
  std::size_t c = 0;
  while (v[c] == 0) ++c;
  if (v[c] != 1) detail::scale(v.data(), inverse_mod(v[c], m_.value()), c, cols_, m_);
  // Earlier rows may pick up entries left of their own pivot here.
  for (auto& r : rows_)
    if (r[c]) detail::axpy_neg(r.data(), v.data(), r[c], c, cols_, m_);
  rows_.push_back(std::move(v));
  pivots_.push_back(c);
  return true;
}

}  // namespace lqc
