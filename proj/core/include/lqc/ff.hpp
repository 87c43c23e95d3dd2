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
#include <cstdint>
#include <ostream>

namespace lqc {

/// An odd prime p with 3 <= p < 2^31. Primality is checked on construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const noexcept { return p_; }

  // floor(x mod p) for x < 2^64, using a precomputed Barrett constant.
  std::uint32_t reduce(std::uint64_t x) const noexcept {
    const auto quot = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - quot * p_;
    while (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t reduce_signed(std::int64_t x) const noexcept {
    const auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
};

bool is_prime(std::uint64_t n);

class FieldElem {
 public:
  using context_type = PrimeModulus;

  FieldElem(std::int64_t value, PrimeModulus m) : v_(m.reduce_signed(value)), m_(m) {}

  static FieldElem zero(PrimeModulus m) { return FieldElem(0, m); }
  static FieldElem one(PrimeModulus m) { return FieldElem(1, m); }
  static FieldElem from_canonical(std::uint32_t v, PrimeModulus m) {
    FieldElem e(0, m);
    e.v_ = v;
    return e;
  }

  std::uint32_t value() const noexcept { return v_; }
  PrimeModulus modulus() const noexcept { return m_; }
  PrimeModulus context() const noexcept { return m_; }
  bool is_zero() const noexcept { return v_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  // Extended Euclid; throws std::domain_error on zero.
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t k) const;

  friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
    return a.v_ == b.v_ && a.m_ == b.m_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& e) {
    return os << e.v_;
  }

 private:
  std::uint32_t v_;
  PrimeModulus m_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// q = p^e with e >= 1, together with pi = (q - 1) / 2.
struct FrobeniusPower {
  std::uint64_t q;
  unsigned e;
  std::uint64_t pi;

  // Throws HypothesisError unless q is a positive power of p.
  static FrobeniusPower make(PrimeModulus m, std::uint64_t q);
};

/// C(a, b) mod p via Lucas digit products; zero when b > a.
FieldElem binom_mod_p(std::uint64_t a, std::uint64_t b, PrimeModulus m);

/// 4^{-t} C(2t, t) in F_p.
FieldElem lambda_t(std::uint64_t t, PrimeModulus m);

/// prod_{h=1}^{t} (2h - 1) mod p.
FieldElem odd_product(std::uint64_t t, PrimeModulus m);

// The four product identities relating (2t)!, t!, 2^t, prod(2h-1) and
// lambda_t. Each is stored as the two sides so failures can be reported.
struct OddProductIdentities {
  FieldElem factorial_2t;      // (2t)!
  FieldElem odd_prod;          // prod_{h<=t} (2h-1)
  FieldElem lambda;            // lambda_t
  std::array<FieldElem, 4> lhs;
  std::array<FieldElem, 4> rhs;

  bool holds(std::size_t k) const { return lhs.at(k) == rhs.at(k); }
  bool all_hold() const {
    for (std::size_t k = 0; k < 4; ++k)
      if (!holds(k)) return false;
    return true;
  }
};

OddProductIdentities odd_product_identities(std::uint64_t t, PrimeModulus m);

/// u = (-1)^D ((2D-1)!!)^2; requires p > 2D - 1.
FieldElem unit_u(unsigned D, PrimeModulus m);

/// n! mod p.
FieldElem factorial_mod_p(std::uint64_t n, PrimeModulus m);

}  // namespace lqc
