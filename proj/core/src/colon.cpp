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

#include "lqc/colon.hpp"

#include <algorithm>
#include <string>

#include "lqc/errors.hpp"
#include "lqc/parallel.hpp"

namespace lqc {

namespace {

constexpr std::uint32_t kAbsent = UINT32_MAX;

std::int64_t socle_degree_s(std::uint64_t q, unsigned d) {
  return 3 * static_cast<std::int64_t>(q - 1) - static_cast<std::int64_t>(d);
}

std::int64_t floor_half(std::int64_t s) { return s >= 0 ? s / 2 : -((-s + 1) / 2); }

// Matrix of multiplication by f from Q_i to Q_{i+d}, one row per target
// monomial and one column per source monomial.
FpMatrix multiplication_map(const Poly& f, unsigned d, const QuotientBasis& qb, std::uint64_t i) {
  const PrimeModulus m = f.modulus();
  const auto& src = qb.monomials(i);
  const std::size_t rows = qb.dim(i + d);
  FpMatrix a(m, rows, src.size());
  if (rows == 0) return a;
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& t : f.terms()) {
      const Monomial prod = src[c] * t.mono;
      if (auto r = qb.index_of(prod)) a(*r, c) = m.reduce(std::uint64_t{a(*r, c)} + t.coef);
    }
  return a;
}

std::size_t kernel_dim_direct(const Poly& f, unsigned d, const QuotientBasis& qb, std::uint64_t i) {
  FpMatrix a = multiplication_map(f, d, qb, i);
  return qb.dim(i) - a.eliminate(false, qb.dim(i)).size();
}

// Multiply each kernel vector by x, y, z and express the products in Q_i.
FpMatrix shifted_products(const FpMatrix& prev, const QuotientBasis& qb, std::uint64_t i) {
  const auto& src = qb.monomials(i - 1);
  FpMatrix out(prev.modulus(), 3 * prev.rows(), qb.dim(i));
  for (std::size_t r = 0; r < prev.rows(); ++r)
    for (unsigned v = 0; v < 3; ++v) {
      std::uint32_t* row = out.row(3 * r + v);
      for (std::size_t c = 0; c < src.size(); ++c) {
        const std::uint32_t e = prev(r, c);
        if (!e) continue;
        Monomial mono = src[c];
        mono.set(v, mono[v] + 1);
        if (auto idx = qb.index_of(mono)) row[*idx] = e;
      }
    }
  return out;
}

}  // namespace

QuotientBasis::QuotientBasis(std::uint64_t q) : q_(q) {
  if (q < 2) throw HypothesisError("q must be at least 2");
  if (q > 256) throw HypothesisError("q too large for dense quotient computations (limit 256)");
  index_.assign(q * q * q, kAbsent);
  by_degree_.resize(top_degree() + 1);
  for (std::uint64_t i = 0; i <= top_degree(); ++i) {
    by_degree_[i] = monomials_of_degree(3, i, static_cast<std::uint32_t>(q - 1));
    for (std::size_t k = 0; k < by_degree_[i].size(); ++k)
    {
      const Monomial& mono = by_degree_[i][k];
      index_[(mono[0] * q + mono[1]) * q + mono[2]] = static_cast<std::uint32_t>(k);
    }
  }
}

std::optional<std::size_t> QuotientBasis::index_of(const Monomial& m) const {
  if (m.nvars() != 3 || m[0] >= q_ || m[1] >= q_ || m[2] >= q_) return std::nullopt;
  const std::uint32_t k = index_[(m[0] * q_ + m[1]) * q_ + m[2]];
  if (k == kAbsent) return std::nullopt;
  return k;
}

std::uint64_t dim_frobenius_piece(std::uint64_t i, std::uint64_t q) {
  // Inclusion-exclusion for exponents all below q.
  std::int64_t standard = 0;
  const std::int64_t sign[4] = {1, -3, 3, -1};
  for (std::uint64_t k = 0; k <= 3; ++k) {
    if (k * q > i) break;
    standard += sign[k] * static_cast<std::int64_t>(binomial(i - k * q + 2, 2));
  }
  return binomial(i + 2, 2) - static_cast<std::uint64_t>(standard);
}

unsigned validate_colon_input(const Poly& f, std::uint64_t q) {
  if (f.nvars() != 3) throw HypothesisError("colon computations need exactly three variables");
  if (f.is_zero()) throw HypothesisError("f must be nonzero");
  if (!f.is_homogeneous()) throw HypothesisError("f must be homogeneous");
  const std::uint64_t d = f.degree().value();
  if (d <= 1 || d >= q)
    throw HypothesisError("deg f = " + std::to_string(d) + " must satisfy 1 < deg f < q = " +
                          std::to_string(q));
  return static_cast<unsigned>(d);
}

bool ColonPiece::contains(const Poly& g) const {
  if (g.is_zero()) return true;
  if (!g.is_homogeneous() || g.degree().value() != degree) return false;
  RowSpace space(basis.modulus(), dim_p);
  for (std::size_t r = 0; r < basis.rows(); ++r)
    space.insert(std::vector<std::uint32_t>(basis.row(r), basis.row(r) + dim_p));
  const auto coords = graded_component(g, degree);
  std::vector<std::uint32_t> v(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) v[k] = coords[k].value();
  return space.contains(std::move(v));
}

ColonPiece colon_piece(const Poly& f, std::uint64_t q, std::uint64_t i) {
  const unsigned d = validate_colon_input(f, q);
  const PrimeModulus m = f.modulus();
  const QuotientBasis qb(q);
  const DegreeBasis full(3, i);

  ColonPiece piece{i, full.size(), 0, 0, FpMatrix(m, 0, full.size()), full.monomials()};
  std::vector<std::uint32_t> row(full.size());
  for (std::size_t k = 0; k < full.size(); ++k)
    if (full[k].max_exponent() >= q) {
      std::fill(row.begin(), row.end(), 0);
      row[k] = 1;
      piece.basis.append_row(row);
      ++piece.dim_frob;
    }
  if (i <= qb.top_degree()) {
    const FpMatrix ker = multiplication_map(f, d, qb, i).right_kernel();
    const auto& std_monos = qb.monomials(i);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t c = 0; c < std_monos.size(); ++c) row[*full.index_of(std_monos[c])] = ker(r, c);
      piece.basis.append_row(row);
    }
  }
  piece.dim = piece.basis.eliminate(true).size();
  return piece;
}

std::vector<std::size_t> kernel_dims(const Poly& f, std::uint64_t q, std::uint64_t last,
                                     const RunOptions& opts) {
  const unsigned d = validate_colon_input(f, q);
  const QuotientBasis qb(q);
  const std::int64_t s = socle_degree_s(q, d);
  std::vector<std::size_t> rank(static_cast<std::size_t>(s) + 1, 0);
  // Only degrees up to s/2 are computed; the rest follows from the duality.
  std::vector<std::size_t> needed;
  for (std::uint64_t i = 0; i <= last && static_cast<std::int64_t>(i) <= s; ++i) {
    const std::size_t j = std::min<std::size_t>(i, static_cast<std::size_t>(s) - i);
    needed.push_back(j);
  }
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  parallel_for(needed.size(), opts.jobs, [&](std::size_t k) {
    const std::size_t j = needed[k];
    rank[j] = qb.dim(j) - kernel_dim_direct(f, d, qb, j);
  });
  std::vector<std::size_t> out(last + 1);
  for (std::uint64_t i = 0; i <= last; ++i) {
    if (static_cast<std::int64_t>(i) > s) {
      out[i] = qb.dim(i);
    } else {
      const std::size_t j = std::min<std::size_t>(i, static_cast<std::size_t>(s) - i);
      out[i] = qb.dim(i) - rank[j];
    }
  }
  return out;
}

LqcReport is_lqc(const Poly& f, std::uint64_t q, const RunOptions& opts) {
  const unsigned d = validate_colon_input(f, q);
  const QuotientBasis qb(q);
  LqcReport rep;
  rep.q = q;
  rep.d = d;
  rep.s = socle_degree_s(q, d);
  rep.s_odd = rep.s % 2 != 0;
  rep.half_s = floor_half(rep.s);
  const std::size_t n = static_cast<std::size_t>(rep.half_s) + 1;
  std::vector<std::size_t> k(n, 0);
  parallel_for(n, opts.jobs, [&](std::size_t i) { k[i] = kernel_dim_direct(f, d, qb, i); });
  rep.lqc = true;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t frob = dim_frobenius_piece(i, q);
    rep.dims.push_back({i, binomial(i + 2, 2), frob, frob + k[i]});
    if (k[i] != 0 && rep.lqc) {
      rep.lqc = false;
      rep.first_failing_degree = i;
      rep.excess = k[i];
    }
  }
  return rep;
}

std::map<std::uint64_t, std::size_t> ColonProfile::extra_generators() const {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& g : degrees)
    if (g.extra) out[g.degree] = g.extra;
  return out;
}

std::map<std::uint64_t, std::size_t> ColonProfile::all_generators() const {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& g : degrees)
    if (g.mu) out[g.degree] = g.mu;
  return out;
}

std::vector<std::uint64_t> ColonProfile::extra_generator_degrees() const {
  std::vector<std::uint64_t> out;
  for (const auto& g : degrees) out.insert(out.end(), g.extra, g.degree);
  return out;
}

ColonProfile generator_profile(const Poly& f, std::uint64_t q, const RunOptions& opts) {
  const unsigned d = validate_colon_input(f, q);
  const PrimeModulus m = f.modulus();
  const QuotientBasis qb(q);
  ColonProfile prof;
  prof.q = q;
  prof.d = d;
  prof.s = socle_degree_s(q, d);
  prof.s_odd = prof.s % 2 != 0;
  prof.last_degree = static_cast<std::uint64_t>(prof.s + 1);
  if (opts.max_degree && *opts.max_degree < prof.last_degree) {
    prof.last_degree = *opts.max_degree;
    prof.capped = true;
  }
  const std::size_t n = prof.last_degree + 1;

  // Kernel bases in standard coordinates; above s the kernel is all of Q_i.
  std::vector<FpMatrix> ker(n, FpMatrix(m, 0, 0));
  parallel_for(n, opts.jobs, [&](std::size_t i) {
    if (static_cast<std::int64_t>(i) > prof.s)
      ker[i] = FpMatrix::identity(m, qb.dim(i));
    else
      ker[i] = multiplication_map(f, d, qb, i).right_kernel();
  });

  std::vector<GeneratorDegree> out(n);
  parallel_for(n, opts.jobs, [&](std::size_t i) {
    GeneratorDegree g{i, binomial(i + 2, 2), dim_frobenius_piece(i, q), 0, 0, 0};
    const std::size_t ki = ker[i].rows();
    g.dim_colon = g.dim_frob + ki;
    std::size_t r_std = 0;
    if (i > 0 && ker[i - 1].rows() > 0 && ki > 0) {
      FpMatrix prod = shifted_products(ker[i - 1], qb, i);
      r_std = prod.eliminate(false, ki).size();
    }
    g.extra = ki - r_std;
    g.mu = g.extra;
    if (i == q) {
      // Rank of the products with the three pure powers kept as coordinates.
      const auto& src = qb.monomials(i - 1);
      FpMatrix prod(m, 3 * ker[i - 1].rows(), qb.dim(i) + 3);
      for (std::size_t r = 0; r < ker[i - 1].rows(); ++r)
        for (unsigned v = 0; v < 3; ++v) {
          std::uint32_t* row = prod.row(3 * r + v);
          for (std::size_t c = 0; c < src.size(); ++c) {
            const std::uint32_t e = ker[i - 1](r, c);
            if (!e) continue;
            Monomial mono = src[c];
            mono.set(v, mono[v] + 1);
            if (auto idx = qb.index_of(mono))
              row[3 + *idx] = e;
            else
              row[v] = e;  // mono is the pure power of variable v
          }
        }
      FpMatrix std_only(m, prod.rows(), qb.dim(i));
      for (std::size_t r = 0; r < prod.rows(); ++r)
        for (std::size_t c = 0; c < qb.dim(i); ++c) std_only(r, c) = prod(r, 3 + c);
      const std::size_t r_all = prod.eliminate(false).size();
      const std::size_t r_proj = std_only.eliminate(false).size();
      g.mu += 3 - (r_all - r_proj);
    }
    out[i] = g;
  });
  prof.degrees = std::move(out);

  prof.lqc = true;
  for (const auto& g : prof.degrees)
    if (static_cast<std::int64_t>(g.degree) <= floor_half(prof.s) && g.dim_colon != g.dim_frob)
      prof.lqc = false;
  if (prof.capped && static_cast<std::int64_t>(prof.last_degree) < floor_half(prof.s))
    prof.lqc = is_lqc(f, q, opts).lqc;
  return prof;
}

bool consequences_apply(bool lqc, unsigned d, std::uint64_t q) {
  return lqc && d % 2 == 0 && q >= d + 3;
}

std::vector<std::size_t> quotient_hilbert(const Poly& f, std::uint64_t q, const RunOptions& opts) {
  const unsigned d = validate_colon_input(f, q);
  const QuotientBasis qb(q);
  const std::int64_t s = socle_degree_s(q, d);
  const auto k = kernel_dims(f, q, static_cast<std::uint64_t>(s), opts);
  std::vector<std::size_t> h(qb.top_degree() + 1, 0);
  for (std::uint64_t i = 0; i < h.size(); ++i) {
    const std::size_t image = i >= d ? qb.dim(i - d) - k[i - d] : 0;
    h[i] = qb.dim(i) - image;
  }
  return h;
}

QuotientReport quotient_report(const Poly& f, std::uint64_t q, const RunOptions& opts) {
  const unsigned d = validate_colon_input(f, q);
  const PrimeModulus m = f.modulus();
  const QuotientBasis qb(q);
  QuotientReport rep;
  rep.q = q;
  rep.d = d;
  rep.s = socle_degree_s(q, d);
  const std::uint64_t top = qb.top_degree();

  const auto k = kernel_dims(f, q, static_cast<std::uint64_t>(rep.s), opts);
  rep.lqc = true;
  for (std::int64_t i = 0; i <= floor_half(rep.s); ++i)
    if (k[static_cast<std::size_t>(i)] != 0) rep.lqc = false;

  rep.hilbert.assign(top + 1, 0);
  for (std::uint64_t i = 0; i <= top; ++i) {
    const std::size_t image = i >= d ? qb.dim(i - d) - k[i - d] : 0;
    rep.hilbert[i] = qb.dim(i) - image;
    rep.hk += rep.hilbert[i];
    if (rep.hilbert[i]) rep.top_degree = i;
  }

  // Reduced echelon form of the image f Q_{i-d} inside Q_i for each degree.
  struct Image {
    FpMatrix rref;
    std::vector<std::size_t> pivots;
    std::vector<std::uint32_t> pivot_row;  // column -> row, or kAbsent
    std::vector<std::uint32_t> free_pos;   // column -> position among free columns
    std::size_t nfree = 0;
  };
  auto image_of = [&](std::uint64_t i) {
    Image im{FpMatrix(m, 0, qb.dim(i)), {}, {}, {}, 0};
    if (i >= d) {
      im.rref = multiplication_map(f, d, qb, i - d).transpose();
      im.pivots = im.rref.eliminate(true);
    }
    im.pivot_row.assign(qb.dim(i), kAbsent);
    im.free_pos.assign(qb.dim(i), kAbsent);
    for (std::size_t r = 0; r < im.pivots.size(); ++r)
      im.pivot_row[im.pivots[r]] = static_cast<std::uint32_t>(r);
    for (std::size_t c = 0; c < qb.dim(i); ++c)
      if (im.pivot_row[c] == kAbsent) im.free_pos[c] = static_cast<std::uint32_t>(im.nfree++);
    return im;
  };

  std::vector<std::size_t> socle(top + 1, 0);
  const unsigned width = std::max(1u, opts.jobs);
  std::vector<Image> window;
  window.push_back(image_of(0));
  for (std::uint64_t base = 0; base <= top; base += width) {
    const std::uint64_t end = std::min<std::uint64_t>(top, base + width - 1);
    // window[0] is degree base; extend through degree end + 1.
    const std::size_t have = window.size();
    const std::size_t want = static_cast<std::size_t>(end - base + 2);
    window.resize(want, Image{FpMatrix(m, 0, 0), {}, {}, {}, 0});
    parallel_for(want - have, opts.jobs, [&](std::size_t t) {
      const std::uint64_t deg = base + have + t;
      window[have + t] = image_of(deg);  // degree top + 1 yields an empty image
    });
    parallel_for(static_cast<std::size_t>(end - base + 1), opts.jobs, [&](std::size_t t) {
      const std::uint64_t i = base + t;
      const Image& cur = window[t];
      const Image& nxt = window[t + 1];
      if (cur.nfree == 0) return;
      const auto& monos = qb.monomials(i);
      FpMatrix map(m, cur.nfree, 3 * nxt.nfree);
      for (std::size_t c = 0; c < monos.size(); ++c) {
        if (cur.pivot_row[c] != kAbsent) continue;
        std::uint32_t* row = map.row(cur.free_pos[c]);
        for (unsigned v = 0; v < 3; ++v) {
          Monomial mono = monos[c];
          mono.set(v, mono[v] + 1);
          const auto idx = qb.index_of(mono);
          if (!idx) continue;
          std::uint32_t* part = row + v * nxt.nfree;
          if (nxt.pivot_row[*idx] == kAbsent) {
            part[nxt.free_pos[*idx]] = 1;
          } else {
            // Normal form of a pivot monomial: minus the rest of its row.
            const std::uint32_t* pr = nxt.rref.row(nxt.pivot_row[*idx]);
            for (std::size_t cc = 0; cc < qb.dim(i + 1); ++cc)
              if (pr[cc] && nxt.pivot_row[cc] == kAbsent) part[nxt.free_pos[cc]] = m.value() - pr[cc];
          }
        }
      }
      socle[i] = cur.nfree - map.eliminate(false).size();
    });
    // Keep the image for degree end + 1 as the next window's first entry.
    Image last = std::move(window.back());
    window.clear();
    window.push_back(std::move(last));
  }
  for (std::uint64_t i = 0; i <= top; ++i)
    if (socle[i]) rep.socle[i] = socle[i];

  if (consequences_apply(rep.lqc, d, q)) {
    const std::uint64_t num = 9 * std::uint64_t{d} * q * q + d - std::uint64_t{d} * d * d;
    rep.hk_formula = num / 12;
    rep.regularity_formula = (3 * q + d - 5) / 2;
  }
  return rep;
}

Poly apply_linear_change(const Poly& f, const FpMatrix& T, FieldElem scalar) {
  if (f.nvars() != 3) throw HypothesisError("linear changes act on three variables");
  if (T.rows() != 3 || T.cols() != 3) throw std::invalid_argument("T must be 3 x 3");
  if (!(T.modulus() == f.modulus()) || !(scalar.modulus() == f.modulus()))
    throw std::invalid_argument("modulus mismatch");
  if (T.det().is_zero()) throw HypothesisError("linear change of variables is singular");
  if (scalar.is_zero()) throw HypothesisError("scalar must be nonzero");
  const PolyRing ring = f.ring();
  std::vector<Poly> images;
  for (unsigned j = 0; j < 3; ++j) {
    Poly img = Poly::zero(ring);
    for (unsigned k = 0; k < 3; ++k) img += Poly::variable(ring, k) * T.entry(j, k);
    images.push_back(img);
  }
  return f.substitute(images) * scalar;
}

}  // namespace lqc
