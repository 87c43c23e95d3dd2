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
#include <map>
#include <optional>
#include <vector>

#include "lqc/linalg.hpp"
#include "lqc/poly.hpp"

namespace lqc {

/// Standard monomials of Q = k[x,y,z]/m^[q] (every exponent below q),
/// grouped by degree in decreasing grevlex order.
class QuotientBasis {
 public:
  explicit QuotientBasis(std::uint64_t q);

  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t top_degree() const noexcept { return 3 * (q_ - 1); }
  std::size_t dim(std::uint64_t i) const {
    return i <= top_degree() ? by_degree_[i].size() : 0;
  }
  const std::vector<Monomial>& monomials(std::uint64_t i) const { return by_degree_.at(i); }
  // Position of a standard monomial within its degree, or nullopt.
  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  std::uint64_t q_;
  std::vector<std::vector<Monomial>> by_degree_;
  std::vector<std::uint32_t> index_;  // (a, b, c) -> position within its degree
};

/// Monomials of degree i in three variables with some exponent >= q.
std::uint64_t dim_frobenius_piece(std::uint64_t i, std::uint64_t q);

/// Checks that f is a homogeneous ternary form with 1 < deg f < q and returns deg f.
unsigned validate_colon_input(const Poly& f, std::uint64_t q);

/// Degree-i part of the colon ideal m^[q] : f.
struct ColonPiece {
  std::uint64_t degree = 0;
  std::size_t dim_p = 0;      // C(i+2, 2)
  std::size_t dim_frob = 0;   // (m^[q])_i
  std::size_t dim = 0;        // (m^[q] : f)_i
  // Reduced echelon basis in DegreeBasis(3, i) coordinates.
  FpMatrix basis;
  std::vector<Monomial> basis_monomials;

  bool contains(const Poly& g) const;
};

ColonPiece colon_piece(const Poly& f, std::uint64_t q, std::uint64_t i);

struct DegreeDims {
  std::uint64_t degree;
  std::size_t dim_p;
  std::size_t dim_frob;
  std::size_t dim_colon;
};

struct LqcReport {
  bool lqc = false;
  std::uint64_t q = 0;
  unsigned d = 0;
  std::int64_t s = 0;
  std::int64_t half_s = 0;   // floor(s / 2); degrees 0..half_s are tested
  bool s_odd = false;
  std::optional<std::uint64_t> first_failing_degree;
  std::size_t excess = 0;    // dim colon - dim frobenius at the failing degree
  std::vector<DegreeDims> dims;
};

struct RunOptions {
  unsigned jobs = 1;
  std::optional<std::uint64_t> max_degree;
};

LqcReport is_lqc(const Poly& f, std::uint64_t q, const RunOptions& opts = {});

struct GeneratorDegree {
  std::uint64_t degree;
  std::size_t dim_p;
  std::size_t dim_frob;
  std::size_t dim_colon;
  std::size_t mu;      // minimal generators of m^[q] : f in this degree
  std::size_t extra;   // those not accounted for by x^q, y^q, z^q
};

struct ColonProfile {
  std::uint64_t q = 0;
  unsigned d = 0;
  std::int64_t s = 0;
  bool s_odd = false;
  bool lqc = false;
  std::uint64_t last_degree = 0;  // s + 1 unless capped
  bool capped = false;
  std::vector<GeneratorDegree> degrees;

  std::map<std::uint64_t, std::size_t> extra_generators() const;
  std::map<std::uint64_t, std::size_t> all_generators() const;
  std::vector<std::uint64_t> extra_generator_degrees() const;  // sorted multiset
};

ColonProfile generator_profile(const Poly& f, std::uint64_t q, const RunOptions& opts = {});

struct QuotientReport {
  std::uint64_t q = 0;
  unsigned d = 0;
  std::int64_t s = 0;
  bool lqc = false;
  std::vector<std::size_t> hilbert;               // H_i for i = 0..3(q-1)
  std::uint64_t hk = 0;
  std::optional<std::uint64_t> hk_formula;        // (9 d q^2 - d^3 + d) / 12
  std::map<std::uint64_t, std::size_t> socle;     // degree -> dimension (nonzero only)
  std::uint64_t top_degree = 0;                   // largest i with H_i != 0
  std::optional<std::uint64_t> regularity_formula;  // (3q + d - 5) / 2
};

/// Hypotheses under which the closed-form consequences apply: lqc, d even,
/// q >= d + 3.
bool consequences_apply(bool lqc, unsigned d, std::uint64_t q);

/// H_i of P/(m^[q] + (f)) for i = 0 .. 3(q-1).
std::vector<std::size_t> quotient_hilbert(const Poly& f, std::uint64_t q, const RunOptions& opts = {});

QuotientReport quotient_report(const Poly& f, std::uint64_t q, const RunOptions& opts = {});

/// scalar * f(T x) where variable j maps to sum_k T(j, k) x_k.
Poly apply_linear_change(const Poly& f, const FpMatrix& T, FieldElem scalar);

/// dim K_i for K = ker(f : Q -> Q), every i in [0, last]. Uses the
/// duality rank(f: Q_i -> Q_{i+d}) = rank(f: Q_{s-i} -> Q_{s-i+d}).
/// dim (m^[q] : f)_i is dim_frobenius_piece(i) + dim K_i.
std::vector<std::size_t> kernel_dims(const Poly& f, std::uint64_t q, std::uint64_t last,
                                     const RunOptions& opts = {});

}  // namespace lqc
