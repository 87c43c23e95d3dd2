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

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lqc/ff.hpp"

namespace lqc {

inline constexpr unsigned kMaxVars = 8;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(unsigned nvars);
  Monomial(std::initializer_list<std::uint32_t> exponents);
  static Monomial from_exponents(std::span<const std::uint32_t> exponents);

  unsigned nvars() const noexcept { return n_; }
  std::uint32_t operator[](unsigned i) const noexcept { return e_[i]; }
  void set(unsigned i, std::uint32_t value) noexcept { e_[i] = value; }
  std::uint64_t degree() const noexcept;
  std::uint32_t max_exponent() const noexcept;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  // Precondition: divides(o).
  Monomial quotient_of(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

// Graded reverse lexicographic order: higher total degree first, ties broken
// by the smaller exponent in the last variable where the two differ.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Total degree, or minus infinity for the zero polynomial.
class Degree {
 public:
  explicit constexpr Degree(std::uint64_t v) : v_(v), neg_inf_(false) {}
  static constexpr Degree minus_infinity() {
    Degree d(0);
    d.neg_inf_ = true;
    return d;
  }

  constexpr bool is_minus_infinity() const noexcept { return neg_inf_; }
  std::uint64_t value() const;

  friend Degree operator+(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) return minus_infinity();
    return Degree(a.v_ + b.v_);
  }
  friend bool operator==(Degree a, Degree b) noexcept {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
    if (a.neg_inf_ || b.neg_inf_) return (!a.neg_inf_) <=> (!b.neg_inf_);
    return a.v_ <=> b.v_;
  }

 private:
  std::uint64_t v_;
  bool neg_inf_;
};

struct PolyRing {
  PrimeModulus modulus;
  unsigned nvars = 3;

  friend bool operator==(const PolyRing& a, const PolyRing& b) noexcept {
    return a.modulus == b.modulus && a.nvars == b.nvars;
  }
};

struct Term {
  Monomial mono;
  std::uint32_t coef;  // canonical, nonzero
};

/// Sparse polynomial over F_p. Terms are kept sorted in decreasing grevlex
/// order with no zero coefficients and no repeated monomials.
class Poly {
 public:
  using context_type = PolyRing;

  explicit Poly(PolyRing ring);

  static Poly zero(PolyRing ring) { return Poly(ring); }
  static Poly one(PolyRing ring);
  static Poly constant(PolyRing ring, FieldElem c);
  static Poly variable(PolyRing ring, unsigned index);
  static Poly monomial(PolyRing ring, const Monomial& m, FieldElem c);
  // Canonicalizes: sorts, merges duplicates, drops zeros.
  static Poly from_terms(PolyRing ring, std::vector<Term> terms);

  PolyRing ring() const noexcept { return ring_; }
  PolyRing context() const noexcept { return ring_; }
  PrimeModulus modulus() const noexcept { return ring_.modulus; }
  unsigned nvars() const noexcept { return ring_.nvars; }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Degree degree() const;
  bool is_homogeneous() const;
  FieldElem coefficient(const Monomial& m) const;
  const Term& leading_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(FieldElem c) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(std::uint64_t k) const;
  // Raise to the p-th power term by term: c m -> c m^p (c^p = c in F_p).
  Poly frobenius() const;
  Poly homogeneous_part(std::uint64_t degree) const;
  Poly multiply_monomial(const Monomial& m) const;

  FieldElem evaluate(std::span<const FieldElem> point) const;
  // Replace variable i by images[i].
  Poly substitute(std::span<const Poly> images) const;

  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept;

 private:
  void check_compatible(const Poly& o) const;

  PolyRing ring_;
  std::vector<Term> terms_;
};

Poly operator*(FieldElem c, const Poly& a);

/// Quotient and remainder of a by b under grevlex division.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

std::vector<std::string> default_variable_names(unsigned nvars);

/// Parse the ASCII grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := uint | var ('^' uint)?
/// Whitespace is insignificant; juxtaposition is rejected.
Poly parse_poly(std::string_view text, PrimeModulus m, std::span<const std::string> vars);
Poly parse_poly(std::string_view text, PrimeModulus m);

/// All monomials of one degree in nvars variables, in decreasing grevlex order.
class DegreeBasis {
 public:
  DegreeBasis(unsigned nvars, std::uint64_t degree);

  std::uint64_t degree() const noexcept { return degree_; }
  unsigned nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return monos_.size(); }
  const Monomial& operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monos_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  unsigned nvars_;
  std::uint64_t degree_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Enumerate exponent vectors of the given degree with every exponent <= cap,
/// sorted in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(unsigned nvars, std::uint64_t degree,
                                          std::uint32_t cap = UINT32_MAX);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Coordinates of the degree-i part of a in the DegreeBasis(nvars, i) order.
std::vector<FieldElem> graded_component(const Poly& a, std::uint64_t i);
Poly from_graded_component(PolyRing ring, std::uint64_t i, std::span<const FieldElem> coords);

// Three-variable helpers used by the structural constructions.
PolyRing xyz_ring(PrimeModulus m);
/// F = xy - z^2.
Poly conic(PrimeModulus m);

/// g = sum_{t=0}^{D-1} lambda_t (xy)^{D-1-t} F^t.
Poly zq_head(unsigned D, PrimeModulus m);

struct ZqExpansion {
  Poly g;
  Poly G;
};

/// Split z^q = z ((xy)^{pi-D+1} g + F^D G) with
///   g = sum_{t<D} lambda_t (xy)^{D-1-t} F^t,
///   G = sum_{D<=t<=pi} lambda_t (xy)^{pi-t} F^{t-D}.
/// Requires p > 2D - 1 and q >= 2D + 1.
ZqExpansion zq_expansion(PrimeModulus m, const FrobeniusPower& fp, unsigned D);

}  // namespace lqc
