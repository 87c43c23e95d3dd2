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

#include "lqc/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "lqc/errors.hpp"

namespace lqc {

Monomial::Monomial(unsigned nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars == 0 || nvars > kMaxVars)
    throw std::invalid_argument("number of variables must be in [1, " +
                                std::to_string(kMaxVars) + "]");
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(static_cast<unsigned>(exponents.size())) {
  unsigned i = 0;
  for (auto v : exponents) e_[i++] = v;
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exponents) {
  Monomial m(static_cast<unsigned>(exponents.size()));
  for (unsigned i = 0; i < exponents.size(); ++i) m.e_[i] = exponents[i];
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (unsigned i = 0; i < n_; ++i) d += e_[i];
  return d;
}

std::uint32_t Monomial::max_exponent() const noexcept {
  std::uint32_t best = 0;
  for (unsigned i = 0; i < n_; ++i) best = std::max(best, e_[i]);
  return best;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (unsigned i = 0; i < n_; ++i) {
    const std::uint64_t s = std::uint64_t{e_[i]} + o.e_[i];
    if (s > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  for (unsigned i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r = o;
  for (unsigned i = 0; i < n_; ++i) r.e_[i] = o.e_[i] - e_[i];
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = n_;
  for (unsigned i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) noexcept {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  for (unsigned i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::uint64_t Degree::value() const {
  if (neg_inf_) throw std::logic_error("degree of the zero polynomial has no value");
  return v_;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex(a.mono, b.mono) > 0; }

}  // namespace

Poly::Poly(PolyRing ring) : ring_(ring) {
  if (ring.nvars == 0 || ring.nvars > kMaxVars)
    throw std::invalid_argument("unsupported number of variables");
}

Poly Poly::one(PolyRing ring) { return constant(ring, FieldElem::one(ring.modulus)); }

Poly Poly::constant(PolyRing ring, FieldElem c) { return monomial(ring, Monomial(ring.nvars), c); }

Poly Poly::variable(PolyRing ring, unsigned index) {
  if (index >= ring.nvars) throw std::out_of_range("variable index out of range");
  Monomial m(ring.nvars);
  m.set(index, 1);
  return monomial(ring, m, FieldElem::one(ring.modulus));
}

Poly Poly::monomial(PolyRing ring, const Monomial& m, FieldElem c) {
  if (m.nvars() != ring.nvars) throw std::invalid_argument("monomial has wrong variable count");
  Poly r(ring);
  if (!c.is_zero()) r.terms_.push_back(Term{m, c.value()});
  return r;
}

Poly Poly::from_terms(PolyRing ring, std::vector<Term> terms) {
  Poly r(ring);
  std::sort(terms.begin(), terms.end(), term_greater);
  const std::uint32_t p = ring.modulus.value();
  for (auto& t : terms) {
    if (t.mono.nvars() != ring.nvars) throw std::invalid_argument("term has wrong variable count");
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      std::uint32_t s = r.terms_.back().coef + t.coef % p;
      if (s >= p) s -= p;
      r.terms_.back().coef = s;
    } else {
      r.terms_.push_back(Term{t.mono, t.coef % p});
    }
    if (r.terms_.back().coef == 0) r.terms_.pop_back();
  }
  return r;
}

void Poly::check_compatible(const Poly& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
}

Degree Poly::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree(terms_.front().mono.degree());  // grevlex is degree-compatible
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.front().mono.degree();
  return terms_.back().mono.degree() == d;
}

FieldElem Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex(t.mono, x) > 0; });
  if (it != terms_.end() && it->mono == m) return FieldElem::from_canonical(it->coef, ring_.modulus);
  return FieldElem::zero(ring_.modulus);
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  const std::uint32_t p = ring_.modulus.value();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const auto cmp = grevlex(terms_[i].mono, o.terms_[j].mono);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = terms_[i].coef + o.terms_[j].coef;
      if (s >= p) s -= p;
      if (s != 0) r.terms_.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  const std::uint32_t p = ring_.modulus.value();
  for (auto& t : r.terms_) t.coef = p - t.coef;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  if (terms_.empty() || o.terms_.empty()) return Poly(ring_);
  if (o.terms_.size() == 1) {
    Poly r = multiply_monomial(o.terms_[0].mono);
    return r * FieldElem::from_canonical(o.terms_[0].coef, ring_.modulus);
  }
  if (terms_.size() == 1) return o * *this;
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prod.push_back(Term{a.mono * b.mono, ring_.modulus.reduce(std::uint64_t{a.coef} * b.coef)});
  return from_terms(ring_, std::move(prod));
}

Poly Poly::operator*(FieldElem c) const {
  if (!(c.modulus() == ring_.modulus)) throw std::invalid_argument("scalar modulus mismatch");
  if (c.is_zero()) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = ring_.modulus.reduce(std::uint64_t{t.coef} * c.value());
  return r;
}

Poly operator*(FieldElem c, const Poly& a) { return a * c; }

Poly Poly::multiply_monomial(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;  // order preserved by multiplication
  return r;
}

Poly Poly::frobenius() const {
  Poly r = *this;
  const std::uint32_t p = ring_.modulus.value();
  for (auto& t : r.terms_) {
    for (unsigned i = 0; i < ring_.nvars; ++i) {
      const std::uint64_t e = std::uint64_t{t.mono[i]} * p;
      if (e > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
      t.mono.set(i, static_cast<std::uint32_t>(e));
    }
  }
  // Scaling every exponent by p preserves grevlex order; coefficients satisfy c^p = c.
  return r;
}

Poly Poly::pow(std::uint64_t k) const {
  // a^k = prod_i Frob^i(a^{k_i}) over the base-p digits k_i of k.
  const std::uint64_t p = ring_.modulus.value();
  Poly result = one(ring_);
  Poly base = *this;
  bool first = true;
  while (k > 0) {
    const std::uint64_t digit = k % p;
    if (!first) base = base.frobenius();
    first = false;
    if (digit != 0) {
      Poly piece = one(ring_);
      Poly sq = base;
      std::uint64_t e = digit;
      while (e) {
        if (e & 1) piece = piece * sq;
        e >>= 1;
        if (e) sq = sq * sq;
      }
      result = result * piece;
    }
    k /= p;
  }
  return result;
}

Poly Poly::homogeneous_part(std::uint64_t degree) const {
  Poly r(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() == degree) r.terms_.push_back(t);
  return r;
}

FieldElem Poly::evaluate(std::span<const FieldElem> point) const {
  if (point.size() != ring_.nvars) throw std::invalid_argument("evaluation point has wrong size");
  FieldElem acc = FieldElem::zero(ring_.modulus);
  for (const auto& t : terms_) {
    FieldElem v = FieldElem::from_canonical(t.coef, ring_.modulus);
    for (unsigned i = 0; i < ring_.nvars; ++i)
      if (t.mono[i]) v *= point[i].pow(t.mono[i]);
    acc += v;
  }
  return acc;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != ring_.nvars) throw std::invalid_argument("substitution has wrong size");
  Poly acc(images.empty() ? ring_ : images[0].ring());
  std::vector<std::unordered_map<std::uint32_t, Poly>> powers(ring_.nvars);
  auto power_of = [&](unsigned i, std::uint32_t e) -> const Poly& {
    auto it = powers[i].find(e);
    if (it == powers[i].end()) it = powers[i].emplace(e, images[i].pow(e)).first;
    return it->second;
  };
  for (const auto& t : terms_) {
    Poly v = Poly::constant(acc.ring(), FieldElem::from_canonical(t.coef, ring_.modulus));
    for (unsigned i = 0; i < ring_.nvars; ++i)
      if (t.mono[i]) v = v * power_of(i, t.mono[i]);
    acc += v;
  }
  return acc;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::vector<std::string> default_variable_names(unsigned nvars) {
  if (nvars == 3) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (unsigned i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string Poly::to_string() const {
  const auto names = default_variable_names(ring_.nvars);
  return to_string(names);
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (unsigned i = 0; i < ring_.nvars; ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += std::to_string(t.coef);
    } else if (t.coef == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coef) + "*" + mono;
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const PolyRing ring = a.ring();
  Poly quot(ring), rem(ring), work = a;
  const Term lead = b.leading_term();
  const FieldElem lead_inv = FieldElem::from_canonical(lead.coef, ring.modulus).inverse();
  while (!work.is_zero()) {
    const Term& t = work.leading_term();
    const FieldElem c = FieldElem::from_canonical(t.coef, ring.modulus);
    if (lead.mono.divides(t.mono)) {
      const Poly step = Poly::monomial(ring, lead.mono.quotient_of(t.mono), c * lead_inv);
      quot += step;
      work -= step * b;
    } else {
      const Poly step = Poly::monomial(ring, t.mono, c);
      rem += step;
      work -= step;
    }
  }
  return {quot, rem};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<Monomial> monomials_of_degree(unsigned nvars, std::uint64_t degree, std::uint32_t cap) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // Fill variables 0..nvars-2 recursively; the last takes the remainder.
  std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned i, std::uint64_t left) {
    if (i + 1 == nvars) {
      if (left <= cap) {
        cur.set(i, static_cast<std::uint32_t>(left));
        out.push_back(cur);
      }
      return;
    }
    const std::uint64_t top = std::min<std::uint64_t>(left, cap);
    for (std::uint64_t e = 0; e <= top; ++e) {
      cur.set(i, static_cast<std::uint32_t>(e));
      rec(i + 1, left - e);
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex(a, b) > 0; });
  return out;
}

DegreeBasis::DegreeBasis(unsigned nvars, std::uint64_t degree)
    : nvars_(nvars), degree_(degree), monos_(monomials_of_degree(nvars, degree)) {
  index_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
}

std::optional<std::size_t> DegreeBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<FieldElem> graded_component(const Poly& a, std::uint64_t i) {
  const DegreeBasis basis(a.nvars(), i);
  std::vector<FieldElem> coords(basis.size(), FieldElem::zero(a.modulus()));
  for (const auto& t : a.terms()) {
    if (t.mono.degree() != i) continue;
    coords[*basis.index_of(t.mono)] = FieldElem::from_canonical(t.coef, a.modulus());
  }
  return coords;
}

Poly from_graded_component(PolyRing ring, std::uint64_t i, std::span<const FieldElem> coords) {
  const DegreeBasis basis(ring.nvars, i);
  if (coords.size() != basis.size()) throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) terms.push_back(Term{basis[k], coords[k].value()});
  return Poly::from_terms(ring, std::move(terms));
}

PolyRing xyz_ring(PrimeModulus m) { return PolyRing{m, 3}; }

Poly conic(PrimeModulus m) {
  const PolyRing r = xyz_ring(m);
  const Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1), z = Poly::variable(r, 2);
  return x * y - z * z;
}

namespace {

// sum_{t=lo}^{hi} lambda_t (xy)^{top - t} F^{t - lo}
Poly lambda_series(std::uint64_t lo, std::uint64_t hi, std::uint64_t top, PrimeModulus m) {
  const PolyRing r = xyz_ring(m);
  const Poly F = conic(m);
  const Poly xy = Poly::variable(r, 0) * Poly::variable(r, 1);
  Poly acc(r);
  Poly F_pow = Poly::one(r);
  for (std::uint64_t t = lo; t <= hi; ++t) {
    acc += xy.pow(top - t) * F_pow * lambda_t(t, m);
    F_pow = F_pow * F;
  }
  return acc;
}

}  // namespace

Poly zq_head(unsigned D, PrimeModulus m) {
  if (D == 0) throw HypothesisError("D must be positive");
  return lambda_series(0, D - 1, D - 1, m);
}

ZqExpansion zq_expansion(PrimeModulus m, const FrobeniusPower& fp, unsigned D) {
  unit_u(D, m);  // rejects p <= 2D - 1
  if (fp.pi < D)
    throw HypothesisError("q = " + std::to_string(fp.q) + " is below 2D + 1 = " +
                          std::to_string(2 * D + 1));
  return ZqExpansion{zq_head(D, m), lambda_series(D, fp.pi, fp.pi, m)};
}

}  // namespace lqc
