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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lqc/matrix.hpp"

namespace lqc {

/// Sorted, distinct, 1-based indices naming rows or columns to delete.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> idx) : IndexSet(std::vector<std::size_t>(idx)) {}
  explicit IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (idx_[k] == 0) throw std::out_of_range("index sets are 1-based");
      if (k > 0 && idx_[k] <= idx_[k - 1])
        throw std::invalid_argument("index set must be strictly increasing");
    }
  }

  const std::vector<std::size_t>& indices() const noexcept { return idx_; }
  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  bool contains(std::size_t i) const {
    for (auto v : idx_)
      if (v == i) return true;
    return false;
  }
  void check_bounds(std::size_t n) const {
    if (!idx_.empty() && idx_.back() > n) throw std::out_of_range("index out of range");
  }

 private:
  std::vector<std::size_t> idx_;
};

/// A with the listed rows and columns removed, relative order kept.
template <CommutativeRing R>
Matrix<R> submatrix(const Matrix<R>& a, const IndexSet& drop_rows, const IndexSet& drop_cols) {
  drop_rows.check_bounds(a.rows());
  drop_cols.check_bounds(a.cols());
  std::vector<std::size_t> rs, cs;
  for (std::size_t r = 1; r <= a.rows(); ++r)
    if (!drop_rows.contains(r)) rs.push_back(r - 1);
  for (std::size_t c = 1; c <= a.cols(); ++c)
    if (!drop_cols.contains(c)) cs.push_back(c - 1);
  Matrix<R> s(a.context(), rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = a(rs[i], cs[j]);
  return s;
}

/// Remove the same rows and columns.
template <CommutativeRing R>
Matrix<R> principal_drop(const Matrix<R>& a, const IndexSet& idx) {
  return submatrix(a, idx, idx);
}

namespace detail {

inline constexpr std::size_t kMaxMaskSize = 64;

inline std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~0ULL : ((1ULL << n) - 1);
}

// Laplace expansion down the rows, memoized on the set of unused columns.
template <CommutativeRing R>
class CofactorDet {
 public:
  explicit CofactorDet(const Matrix<R>& a) : a_(a) {
    if (a.rows() > kMaxMaskSize) throw std::invalid_argument("matrix too large for cofactor expansion");
  }

  R run() { return eval(full_mask(a_.cols())); }

 private:
  R eval(std::uint64_t cols) {
    if (cols == 0) return R::one(a_.context());
    if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
    const std::size_t row = a_.rows() - static_cast<std::size_t>(std::popcount(cols));
    R acc = R::zero(a_.context());
    std::size_t pos = 0;
    for (std::size_t c = 0; c < a_.cols(); ++c) {
      if (!(cols >> c & 1)) continue;
      const R& e = a_(row, c);
      if (!e.is_zero()) {
        R term = e * eval(cols & ~(1ULL << c));
        acc = (pos % 2 == 0) ? acc + term : acc - term;
      }
      ++pos;
    }
    memo_.emplace(cols, acc);
    return acc;
  }

  const Matrix<R>& a_;
  std::unordered_map<std::uint64_t, R> memo_;
};

// Fraction-free elimination with row pivoting; divisions are exact.
template <class F>
F bareiss_det(Matrix<F> a) {
  const std::size_t n = a.rows();
  const auto ctx = a.context();
  F prev = F::one(ctx);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) return F::zero(ctx);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      negate = !negate;
    }
    const F inv_prev = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) * inv_prev;
      a(i, k) = F::zero(ctx);
    }
    prev = a(k, k);
  }
  F d = n == 0 ? F::one(ctx) : a(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace detail

/// Determinant. Field entries use Bareiss elimination; other rings use
/// memoized cofactor expansion. det of 0x0 is 1.
template <CommutativeRing R>
R det(const Matrix<R>& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if constexpr (is_field_v<R>) {
    return detail::bareiss_det(a);
  } else {
    return detail::CofactorDet<R>(a).run();
  }
}

template <CommutativeRing R>
R det_cofactor(const Matrix<R>& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return detail::CofactorDet<R>(a).run();
}

/// Pfaffian evaluator for one skew-symmetric matrix; principal sub-Pfaffians
/// are cached by the bitmask of surviving indices and shared across queries.
template <CommutativeRing R>
class PfaffianExpander {
 public:
  explicit PfaffianExpander(const Matrix<R>& a) : a_(a) {
    if (!a.is_skew_symmetric()) throw std::invalid_argument("Pfaffian of a non-skew-symmetric matrix");
    if (a.rows() > detail::kMaxMaskSize) throw std::invalid_argument("matrix too large for Pfaffian expansion");
  }

  std::size_t size() const noexcept { return a_.rows(); }
  std::uint64_t full() const { return detail::full_mask(a_.rows()); }

  R pfaffian() { return of_mask(full()); }

  // Pf of A with the given 1-based indices removed.
  R without(const IndexSet& drop) {
    drop.check_bounds(a_.rows());
    std::uint64_t m = full();
    for (auto i : drop.indices()) m &= ~(1ULL << (i - 1));
    return of_mask(m);
  }

  R of_mask(std::uint64_t mask) {
    const int k = std::popcount(mask);
    if (k == 0) return R::one(a_.context());
    if (k % 2 == 1) return R::zero(a_.context());
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    // Column with the fewest nonzeros among surviving rows.
    std::size_t j = 0, best = SIZE_MAX;
    for (std::size_t c = 0; c < a_.rows(); ++c) {
      if (!(mask >> c & 1)) continue;
      std::size_t nz = 0;
      for (std::size_t r = 0; r < a_.rows(); ++r)
        if ((mask >> r & 1) && !a_(r, c).is_zero()) ++nz;
      if (nz < best) best = nz, j = c;
    }
    const auto pos = [mask](std::size_t idx) {
      return static_cast<std::size_t>(std::popcount(mask & ((1ULL << idx) - 1))) + 1;
    };
    const std::size_t pj = pos(j);
    R acc = R::zero(a_.context());
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      if (i == j || !(mask >> i & 1)) continue;
      const R& e = a_(i, j);
      if (e.is_zero()) continue;
      const std::size_t pi = pos(i);
      const std::size_t sign = pi + pj + (pj >= pi ? 1 : 0);
      R term = e * of_mask(mask & ~(1ULL << i) & ~(1ULL << j));
      acc = sign % 2 == 0 ? acc + term : acc - term;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  std::size_t cache_size() const noexcept { return memo_.size(); }

 private:
  const Matrix<R>& a_;
  std::unordered_map<std::uint64_t, R> memo_;
};

template <CommutativeRing R>
R pfaffian(const Matrix<R>& a) {
  return PfaffianExpander<R>(a).pfaffian();
}

/// (-1)^{ell+1} Pf(A with row and column ell removed), A of odd size.
template <CommutativeRing R>
R pfaffian_ell(PfaffianExpander<R>& ex, std::size_t ell) {
  if (ex.size() % 2 == 0) throw std::invalid_argument("Pf_ell needs a matrix of odd size");
  if (ell < 1 || ell > ex.size()) throw std::out_of_range("Pf_ell index out of range");
  R v = ex.without(IndexSet{ell});
  return ell % 2 == 0 ? -v : v;
}

template <CommutativeRing R>
R pfaffian_ell(const Matrix<R>& a, std::size_t ell) {
  PfaffianExpander<R> ex(a);
  return pfaffian_ell(ex, ell);
}

/// All Pf_ell for ell = 1..s, sharing one cache.
template <CommutativeRing R>
std::vector<R> all_pfaffian_ell(const Matrix<R>& a) {
  PfaffianExpander<R> ex(a);
  std::vector<R> out;
  out.reserve(a.rows());
  for (std::size_t l = 1; l <= a.rows(); ++l) out.push_back(pfaffian_ell(ex, l));
  return out;
}

/// Adjugate: entry (i,j) is (-1)^{i+j} det(M without row j and column i).
template <CommutativeRing R>
Matrix<R> classical_adjoint(const Matrix<R>& a) {
  if (!a.is_square()) throw std::invalid_argument("adjoint of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<R> adj(a.context(), n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      R m = det(submatrix(a, IndexSet{j}, IndexSet{i}));
      adj(i - 1, j - 1) = (i + j) % 2 == 0 ? m : -m;
    }
  return adj;
}

/// Pfaffian adjoint: entry (i,j) is (-1)^{i+j+H(i-j)} Pf(A without i and j),
/// zero on the diagonal. Satisfies A * adj = adj * A = Pf(A) I.
template <CommutativeRing R>
Matrix<R> pfaffian_adjoint(const Matrix<R>& a) {
  PfaffianExpander<R> ex(a);
  const std::size_t n = a.rows();
  if (n % 2 == 1) throw std::invalid_argument("Pfaffian adjoint needs a matrix of even size");
  Matrix<R> adj(a.context(), n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      R v = ex.without(i < j ? IndexSet{i, j} : IndexSet{j, i});
      const std::size_t sign = i + j + (i >= j ? 1 : 0);
      adj(i - 1, j - 1) = sign % 2 == 0 ? v : -v;
    }
  return adj;
}

/// [[phi, psi], [-psi^T, Phi]].
template <CommutativeRing R>
Matrix<R> assemble_partial2(const Matrix<R>& varphi, const Matrix<R>& psi, const Matrix<R>& Phi) {
  if (!varphi.is_square() || varphi.rows() % 2 != 0)
    throw std::invalid_argument("varphi must be square of even size");
  if (psi.rows() != varphi.rows() || psi.cols() != 3)
    throw std::invalid_argument("psi must be m x 3");
  if (Phi.rows() != 3 || Phi.cols() != 3) throw std::invalid_argument("Phi must be 3 x 3");
  return block2x2(varphi, psi, -psi.transpose(), Phi);
}


/// Checks Pf_{m+l}(d2) = Pf_l(psi^T adj(phi) psi + Pf(phi) Phi) for l = 1,2,3.
template <CommutativeRing R>
bool last_three_pfaffian_identity(const Matrix<R>& varphi, const Matrix<R>& psi, const Matrix<R>& Phi) {
  const Matrix<R> d2 = assemble_partial2(varphi, psi, Phi);
  if (!varphi.is_skew_symmetric() || !Phi.is_skew_symmetric())
    throw std::invalid_argument("varphi and Phi must be skew-symmetric");
  const std::size_t m = varphi.rows();
  const Matrix<R> inner =
      psi.transpose() * pfaffian_adjoint(varphi) * psi + Phi.scaled(pfaffian(varphi));
  PfaffianExpander<R> big(d2);
  PfaffianExpander<R> small(inner);
  for (std::size_t l = 1; l <= 3; ++l)
    if (!(pfaffian_ell(big, m + l) == pfaffian_ell(small, l))) return false;
  return true;
}

}  // namespace lqc
