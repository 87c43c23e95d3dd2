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

#include "lqc/ff.hpp"

#include <string>

#include "lqc/errors.hpp"

namespace lqc {

namespace {

std::uint64_t mul_mod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod64(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp) {
    if (exp & 1) result = mul_mod64(result, base, n);
    base = mul_mod64(base, base, n);
    exp >>= 1;
  }
  return result;
}

}  // namespace

// Deterministic Miller-Rabin; this witness set is exact for all n < 2^64.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p < 3 || p >= (std::uint64_t{1} << 31))
    throw HypothesisError("modulus " + std::to_string(p) + " outside [3, 2^31)");
  if (!is_prime(p)) throw HypothesisError("modulus " + std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
  barrett_ = ~std::uint64_t{0} / p_;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("element is not invertible");
  old_s %= p;
  if (old_s < 0) old_s += p;
  return static_cast<std::uint32_t>(old_s);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  std::uint32_t s = v_ + o.v_;
  if (s >= m_.value()) s -= m_.value();
  return from_canonical(s, m_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  return from_canonical(v_ >= o.v_ ? v_ - o.v_ : v_ + m_.value() - o.v_, m_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  return from_canonical(m_.reduce(std::uint64_t{v_} * o.v_), m_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const {
  return from_canonical(v_ == 0 ? 0 : m_.value() - v_, m_);
}

FieldElem FieldElem::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  return from_canonical(inverse_mod(v_, m_.value()), m_);
}

FieldElem FieldElem::pow(std::uint64_t k) const {
  FieldElem result = one(m_);
  FieldElem base = *this;
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

FrobeniusPower FrobeniusPower::make(PrimeModulus m, std::uint64_t q) {
  const std::uint64_t p = m.value();
  std::uint64_t acc = p;
  unsigned e = 1;
  while (acc < q) {
    if (acc > (~std::uint64_t{0}) / p) break;
    acc *= p;
    ++e;
  }
  if (acc != q)
    throw HypothesisError("q = " + std::to_string(q) + " is not a positive power of p = " +
                          std::to_string(p));
  return FrobeniusPower{q, e, (q - 1) / 2};
}

FieldElem binom_mod_p(std::uint64_t a, std::uint64_t b, PrimeModulus m) {
  const std::uint64_t p = m.value();
  FieldElem result = FieldElem::one(m);
  while (a > 0 || b > 0) {
    const std::uint64_t ai = a % p;
    const std::uint64_t bi = b % p;
    if (bi > ai) return FieldElem::zero(m);
    // C(ai, bi) with ai < p: every factor in the multiplicative formula is a unit.
    FieldElem num = FieldElem::one(m);
    FieldElem den = FieldElem::one(m);
    for (std::uint64_t k = 0; k < bi; ++k) {
      num *= FieldElem(static_cast<std::int64_t>(ai - k), m);
      den *= FieldElem(static_cast<std::int64_t>(k + 1), m);
    }
    result *= num / den;
    a /= p;
    b /= p;
  }
  return result;
}

FieldElem lambda_t(std::uint64_t t, PrimeModulus m) {
  return FieldElem(4, m).inverse().pow(t) * binom_mod_p(2 * t, t, m);
}

FieldElem odd_product(std::uint64_t t, PrimeModulus m) {
  FieldElem acc = FieldElem::one(m);
  for (std::uint64_t h = 1; h <= t; ++h) acc *= FieldElem(static_cast<std::int64_t>(2 * h - 1), m);
  return acc;
}

FieldElem factorial_mod_p(std::uint64_t n, PrimeModulus m) {
  if (n >= m.value()) return FieldElem::zero(m);
  FieldElem acc = FieldElem::one(m);
  for (std::uint64_t k = 2; k <= n; ++k) acc *= FieldElem(static_cast<std::int64_t>(k), m);
  return acc;
}

OddProductIdentities odd_product_identities(std::uint64_t t, PrimeModulus m) {
  const FieldElem fact_2t = factorial_mod_p(2 * t, m);
  const FieldElem fact_t = factorial_mod_p(t, m);
  const FieldElem two_t = FieldElem(2, m).pow(t);
  const FieldElem odd = odd_product(t, m);
  const FieldElem central = binom_mod_p(2 * t, t, m);
  const FieldElem lam = lambda_t(t, m);
  return OddProductIdentities{
      fact_2t,
      odd,
      lam,
      {fact_2t, two_t * odd, odd, odd * odd},
      {two_t * fact_t * odd, fact_t * central, two_t * fact_t * lam, fact_2t * lam},
  };
}

FieldElem unit_u(unsigned D, PrimeModulus m) {
  if (D == 0) throw HypothesisError("D must be positive");
  if (std::uint64_t{m.value()} <= 2 * std::uint64_t{D} - 1)
    throw HypothesisError("characteristic too small: need p > 2D - 1 = " +
                          std::to_string(2 * D - 1) + ", got p = " + std::to_string(m.value()));
  const FieldElem odd = odd_product(D, m);
  const FieldElem sq = odd * odd;
  return (D % 2 == 0) ? sq : -sq;
}

}  // namespace lqc
