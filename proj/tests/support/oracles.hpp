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

// Independent reference implementations used to cross-check the library.
// Each one avoids the algorithm it checks.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline u64 modp(i64 v, u64 p) {
  const i64 r = v % static_cast<i64>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
}

inline u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Pascal's triangle mod p up to row n.
inline std::vector<std::vector<u64>> pascal(std::size_t n, u64 p) {
  std::vector<std::vector<u64>> t(n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    t[a].assign(a + 1, 1 % p);
    for (std::size_t b = 1; b < a; ++b) t[a][b] = (t[a - 1][b - 1] + t[a - 1][b]) % p;
  }
  return t;
}

using Mat = std::vector<std::vector<u64>>;

// Plain Gaussian elimination with Fermat inverses.
inline u64 det_gauss(Mat a, u64 p) {
  const std::size_t n = a.size();
  u64 d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      d = (p - d) % p;
    }
    d = d * a[k][k] % p;
    const u64 inv = invmod(a[k][k], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const u64 f = a[i][k] * inv % p;
      for (std::size_t j = k; j < n; ++j) a[i][j] = (a[i][j] + (p - f) * a[k][j]) % p;
    }
  }
  return d;
}

// Leibniz sum over permutations; only for small n.
inline u64 det_leibniz(const Mat& a, u64 p) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  u64 total = 0;
  do {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    u64 prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod = prod * a[i][perm[i]] % p;
    total = (inv % 2 ? total + p - prod : total + prod) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Perfect-matching sum for the Pfaffian of a small skew matrix.
inline u64 pf_matchings(const Mat& a, u64 p) {
  const std::size_t n = a.size();
  if (n % 2) return 0;
  u64 total = 0;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Enumerate permutations whose pairs are (perm[2k], perm[2k+1]) with
  // perm[2k] < perm[2k+1] and perm[0] < perm[2] < ...; sign by inversions.
  do {
    bool canon = true;
    for (std::size_t k = 0; k + 1 < n && canon; k += 2) canon = perm[k] < perm[k + 1];
    for (std::size_t k = 2; k < n && canon; k += 2) canon = perm[k - 2] < perm[k];
    if (!canon) continue;
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    u64 prod = 1;
    for (std::size_t k = 0; k < n; k += 2) prod = prod * a[perm[k]][perm[k + 1]] % p;
    total = (inv % 2 ? total + p - prod : total + prod) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::size_t rank_gauss(Mat a, u64 p) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = invmod(a[r][c], p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 f = a[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    ++r;
  }
  return r;
}

// Dense polynomials in three variables as exponent-triple maps.
using Exp = std::array<unsigned, 3>;
using DPoly = std::map<Exp, u64>;

inline DPoly mul_schoolbook(const DPoly& a, const DPoly& b, u64 p) {
  DPoly c;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      c[e] = (c[e] + ca * cb) % p;
    }
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

inline std::vector<Exp> all_monomials(unsigned deg) {
  std::vector<Exp> out;
  for (unsigned a = 0; a <= deg; ++a)
    for (unsigned b = 0; a + b <= deg; ++b) out.push_back({a, b, deg - a - b});
  return out;
}

// dim of (m^[q] : f)_i computed in the full space P_i (no quotient trick):
// the kernel of g -> (g f mod monomials with an exponent >= q).
inline std::size_t colon_dim_bruteforce(const DPoly& f, unsigned d, unsigned q, unsigned i, u64 p) {
  const auto src = all_monomials(i);
  const auto dst = all_monomials(i + d);
  std::vector<Exp> keep;
  for (const auto& e : dst)
    if (e[0] < q && e[1] < q && e[2] < q) keep.push_back(e);
  std::map<Exp, std::size_t> pos;
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = k;
  Mat m(src.size(), std::vector<u64>(keep.size(), 0));
  for (std::size_t r = 0; r < src.size(); ++r)
    for (const auto& [e, c] : f) {
      Exp t{e[0] + src[r][0], e[1] + src[r][1], e[2] + src[r][2]};
      if (auto it = pos.find(t); it != pos.end()) m[r][it->second] = (m[r][it->second] + c) % p;
    }
  return src.size() - (keep.empty() ? 0 : rank_gauss(m, p));
}

// Hilbert function of P/(m^[q] + (f)) in degree i, by rank in the full space.
inline std::size_t quotient_dim_bruteforce(const DPoly& f, unsigned d, unsigned q, unsigned i, u64 p) {
  const auto tgt = all_monomials(i);
  std::map<Exp, std::size_t> pos;
  for (std::size_t k = 0; k < tgt.size(); ++k) pos[tgt[k]] = k;
  Mat rows;
  for (const auto& e : tgt)
    if (e[0] >= q || e[1] >= q || e[2] >= q) {
      std::vector<u64> r(tgt.size(), 0);
      r[pos[e]] = 1;
      rows.push_back(r);
    }
  if (i >= d)
    for (const auto& s : all_monomials(i - d)) {
      std::vector<u64> r(tgt.size(), 0);
      for (const auto& [e, c] : f) r[pos[{e[0] + s[0], e[1] + s[1], e[2] + s[2]}]] += c;
      for (auto& v : r) v %= p;
      rows.push_back(r);
    }
  return tgt.size() - (rows.empty() ? 0 : rank_gauss(rows, p));
}

// HK by counting: sum of the quotient Hilbert function over all degrees.
inline std::size_t hk_bruteforce(const DPoly& f, unsigned d, unsigned q, u64 p) {
  std::size_t total = 0;
  for (unsigned i = 0; i <= 3 * (q - 1); ++i) total += quotient_dim_bruteforce(f, d, q, i, p);
  return total;
}

}  // namespace oracle
