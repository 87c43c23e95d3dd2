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

#include "lqc/structural.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lqc/errors.hpp"

namespace lqc {

namespace {

FieldElem fe(std::int64_t v, PrimeModulus m) { return FieldElem(v, m); }

Poly var(PrimeModulus m, unsigned i) { return Poly::variable(xyz_ring(m), i); }

bool all_zero(const PolyMatrix& a) { return a.is_zero(); }

bool all_divisible(const PolyMatrix& a, const Poly& f) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !divmod(a(i, j), f).second.is_zero()) return false;
  return true;
}

std::uint64_t choose2(std::int64_t n) {
  return n < 2 ? 0 : static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
}

}  // namespace

PolyMatrix build_L(std::size_t n, unsigned d, PrimeModulus m) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  const PolyRing ring = xyz_ring(m);
  const Poly x = var(m, 0), y = var(m, 1), z = var(m, 2);
  PolyMatrix L(ring, n, n);
  const auto sd = static_cast<std::int64_t>(d);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto si = static_cast<std::int64_t>(i);
    L(i - 1, i - 1) = z * fe(2 * si - (sd + 1), m);
    if (i < n) {
      L(i - 1, i) = x * fe(si, m);
      L(i, i - 1) = y * fe(-(sd - si), m);
    }
  }
  return L;
}

PolyMatrix build_M(unsigned d, PrimeModulus m) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("M needs an even d >= 2");
  return build_L(d, d, m);
}

Poly A_closed_form(std::size_t n, unsigned d, PrimeModulus m) {
  const PolyRing ring = xyz_ring(m);
  const Poly x = var(m, 0), y = var(m, 1), z = var(m, 2);
  const Poly xy = x * y;
  const Poly F = conic(m);
  const std::size_t N = n / 2, nu = n % 2;
  const auto sd = static_cast<std::int64_t>(d);
  Poly sum = Poly::zero(ring);
  for (std::size_t t = 0; t <= N; ++t) {
    FieldElem a = fe((t + nu) % 2 ? -1 : 1, m);
    for (std::size_t h = 1; h <= N + t + nu; ++h) a *= fe(sd - (2 * static_cast<std::int64_t>(h) - 1), m);
    for (std::size_t h = t + 1; h <= N; ++h) a *= fe(sd - 2 * static_cast<std::int64_t>(h), m);
    a *= binom_mod_p(N, t, m);
    if (a.is_zero()) continue;
    sum += xy.pow(N - t) * F.pow(t) * a;
  }
  return nu ? z * sum : sum;
}

bool verify_L_recurrence(std::size_t n_max, unsigned d, PrimeModulus m) {
  const Poly x = var(m, 0), y = var(m, 1), z = var(m, 2);
  const PolyMatrix full = build_L(n_max, d, m);
  std::vector<Poly> dets;
  for (std::size_t n = 0; n <= n_max; ++n) dets.push_back(det(full.block(0, 0, n, n)));
  const auto sd = static_cast<std::int64_t>(d);
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto sn = static_cast<std::int64_t>(n);
    const Poly rhs = x * y * dets[n - 2] * fe((sn - 1) * (sd - (sn - 1)), m) -
                     z * dets[n - 1] * fe(sd - (2 * sn - 1), m);
    if (!(dets[n] == rhs)) return false;
  }
  return true;
}

MinorsOfM minors_of_M(unsigned d, PrimeModulus m) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("minors_of_M needs an even d >= 2");
  if (m.value() <= d - 1)
    throw HypothesisError("characteristic too small: need p > d - 1 = " + std::to_string(d - 1));
  const unsigned D = d / 2;
  const PolyMatrix M = build_M(d, m);
  const Poly x = var(m, 0), y = var(m, 1), z = var(m, 2);
  MinorsOfM out{det(M), det(submatrix(M, {d}, {1})), det(submatrix(M, {1}, {d})),
                det(submatrix(M, {1}, {1})), det(submatrix(M, {d}, {d}))};
  const FieldElem fact = factorial_mod_p(d - 1, m);
  const Poly g = zq_head(D, m);
  const FieldElem odd = odd_product(D, m);
  const FieldElem sign = fe((d - 1) % 2 ? -1 : 1, m);
  auto expect = [](const Poly& got, const Poly& want, const char* what) {
    if (!(got == want))
      throw ConsistencyError(std::string("closed form mismatch for ") + what + ": got " +
                             got.to_string() + ", expected " + want.to_string());
  };
  expect(out.det_M, conic(m).pow(D) * (odd * odd), "det M");
  expect(out.det_drop_d1, x.pow(d - 1) * fact, "det M without row d, column 1");
  expect(out.det_drop_1d, y.pow(d - 1) * (sign * fact), "det M without row 1, column d");
  expect(out.det_drop_11, z * g * fact, "det M without row 1, column 1");
  expect(out.det_drop_dd, z * g * (-fact), "det M without row d, column d");
  return out;
}

StructuralContext build_context(PrimeModulus m, std::uint64_t q, unsigned D) {
  const FieldElem u = unit_u(D, m);
  const FrobeniusPower fp = FrobeniusPower::make(m, q);
  if (fp.pi < D)
    throw HypothesisError("q = " + std::to_string(q) + " too small: need q >= 2D + 1 = " +
                          std::to_string(2 * D + 1));
  const PolyRing ring = xyz_ring(m);
  const Poly x = var(m, 0), y = var(m, 1), z = var(m, 2);
  const unsigned d = 2 * D;
  const auto [g, G] = zq_expansion(m, fp, D);
  const Poly F = conic(m);
  const Poly f = F.pow(D);
  const PolyMatrix M = build_M(d, m);
  const PolyMatrix varphi = block_skew(M);
  const Poly pf = pfaffian(varphi);
  if (!(pf == f * u))
    throw ConsistencyError("Pf(phi) != u f: got " + pf.to_string());

  const std::uint64_t e = fp.pi - (D - 1);
  const FieldElem lam = lambda_t(D, m);
  const FieldElem dl = fe(d, m) * lam;
  PolyMatrix psi(ring, 2 * d, 3);
  psi(0, 0) = y.pow(e) * dl;
  psi(d, 1) = -x.pow(e);
  psi(d - 1, 2) = x.pow(e) * dl;
  psi(2 * d - 1, 2) = y.pow(e);

  PolyMatrix Phi(ring, 3, 3);
  Phi(0, 1) = z * G;
  Phi(1, 0) = -(z * G);

  const Poly xq = x.pow(q), yq = y.pow(q), zq = z.pow(q);
  const Poly O = Poly::zero(ring);
  const PolyMatrix X = PolyMatrix::from_rows(ring, {{O, zq, -yq}, {-zq, O, xq}, {yq, -xq, O}});

  StructuralContext ctx{m, fp, D, d, fp.pi, 3 * (q - 1) - d, (3 * q + d - 1) / 2, e, ring,
                        x, y, z, F, f, g, G, u, lam, M, varphi, pfaffian_adjoint(varphi),
                        psi, Phi, X, {xq, yq, zq}};
  return ctx;
}

PolyMatrix build_partial2(const StructuralContext& ctx) {
  PolyMatrix d2 = assemble_partial2(ctx.varphi, ctx.psi, ctx.Phi);
  if (!d2.is_skew_symmetric() || d2.rows() != 2 * ctx.d + 3)
    throw ConsistencyError("partial_2 is not skew-symmetric of size 2d + 3");
  return d2;
}

IdentityCheck verify_key_identity(const StructuralContext& ctx) {
  const PolyMatrix lhs = ctx.psi.transpose() * ctx.varphi_adj * ctx.psi +
                         ctx.Phi.scaled(Poly::constant(ctx.ring, ctx.u) * ctx.f);
  const PolyMatrix rhs = ctx.X.scaled(Poly::constant(ctx.ring, ctx.u));
  IdentityCheck out;
  for (std::size_t i = 0; i < 3 && out.holds; ++i)
    for (std::size_t j = 0; j < 3 && out.holds; ++j)
      if (!(lhs(i, j) == rhs(i, j))) {
        out.holds = false;
        out.first_mismatch = std::make_pair(i + 1, j + 1);
        out.detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     "): lhs " + lhs(i, j).to_string() + " vs rhs " + rhs(i, j).to_string();
      }
  return out;
}

MaximalPfaffians maximal_pfaffians(const StructuralContext& ctx) {
  MaximalPfaffians out;
  out.values = all_pfaffian_ell(build_partial2(ctx));
  const std::size_t n = 2 * ctx.d;
  out.last_three_match = true;
  for (std::size_t k = 0; k < 3; ++k)
    if (!(out.values[n + k] == ctx.frobenius_generators[k] * ctx.u)) out.last_three_match = false;
  out.first_degrees_match = true;
  for (std::size_t l = 0; l < n; ++l) {
    const Poly& v = out.values[l];
    if (v.is_zero()) continue;
    ++out.nonzero_first;
    if (!v.is_homogeneous() || v.degree().value() != ctx.s / 2 + 1) out.first_degrees_match = false;
  }
  return out;
}

bool GradedMap::is_homogeneous() const {
  if (matrix.rows() != target_shifts.size() || matrix.cols() != source_shifts.size()) return false;
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      const Poly& e = matrix(r, c);
      if (e.is_zero()) continue;
      if (source_shifts[c] < target_shifts[r] || !e.is_homogeneous() ||
          e.degree().value() != source_shifts[c] - target_shifts[r])
        return false;
    }
  return true;
}

std::vector<std::vector<std::uint64_t>> r_resolution_shifts(const StructuralContext& ctx,
                                                           std::size_t length) {
  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t q = ctx.fp.q;
  for (std::size_t k = 0; k < length; ++k) {
    if (k == 0) {
      out.push_back({0});
    } else if (k == 1) {
      out.push_back({q, q, q});
    } else {
      // Degrees alternate between 1 (phi) and d - 1 (phi^adj) after F_2.
      const std::size_t steps = k - 2;
      const std::uint64_t shift = ctx.b + (steps / 2) * ctx.d + (steps % 2);
      out.emplace_back(2 * ctx.d, shift);
    }
  }
  return out;
}

std::int64_t euler_characteristic(const ResolutionP& res, std::uint64_t i) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < res.shifts.size(); ++k)
    for (auto a : res.shifts[k]) {
      if (a > i) continue;
      const auto term = static_cast<std::int64_t>(choose2(static_cast<std::int64_t>(i - a) + 2));
      total += k % 2 ? -term : term;
    }
  return total;
}

Resolutions assemble_resolutions(const StructuralContext& ctx, const RunOptions& opts) {
  const PolyRing ring = ctx.ring;
  const std::size_t n = 2 * ctx.d;
  const std::uint64_t q = ctx.fp.q;
  const Poly uf = ctx.f * ctx.u;
  const Poly u = Poly::constant(ring, ctx.u);
  const auto pfs = maximal_pfaffians(ctx);

  Resolutions res{
      ResolutionP{GradedMap{PolyMatrix(ring, 1, 4), {0}, {q, q, q, ctx.d}},
                  GradedMap{PolyMatrix(ring, 4, n + 3), {q, q, q, ctx.d}, {}},
                  GradedMap{PolyMatrix(ring, n + 3, n), {}, std::vector<std::uint64_t>(n, ctx.b + 1)},
                  std::vector<Poly>(pfs.values.begin(), pfs.values.begin() + static_cast<std::ptrdiff_t>(n)),
                  {}},
      ResolutionR{PolyMatrix(ring, 1, 3), PolyMatrix(ring, 3, n), ctx.varphi, ctx.varphi_adj, {}},
      {}};
  ResolutionP& P = res.P;
  for (std::size_t k = 0; k < 3; ++k) P.d1.matrix(0, k) = ctx.frobenius_generators[k];
  P.d1.matrix(0, 3) = uf;

  std::vector<std::uint64_t> f2(n, ctx.b);
  f2.insert(f2.end(), 3, q + ctx.d);
  P.d2.source_shifts = f2;
  P.d3.target_shifts = f2;
  const PolyMatrix psiT_adj = ctx.psi.transpose() * ctx.varphi_adj;
  P.d2.matrix.set_block(0, 0, psiT_adj.scaled(u));
  P.d2.matrix.set_block(0, n, PolyMatrix::identity(ring, 3).scaled(uf));
  for (std::size_t c = 0; c < n; ++c) P.d2.matrix(3, c) = -P.bvec[c];
  for (std::size_t k = 0; k < 3; ++k) P.d2.matrix(3, n + k) = -ctx.frobenius_generators[k];
  P.d3.matrix.set_block(0, 0, ctx.varphi);
  P.d3.matrix.set_block(n, 0, -ctx.psi.transpose().scaled(u));
  P.shifts = {{0}, {q, q, q, ctx.d}, f2, std::vector<std::uint64_t>(n, ctx.b + 1)};

  ResolutionR& R = res.R;
  for (std::size_t k = 0; k < 3; ++k) R.xT(0, k) = ctx.frobenius_generators[k];
  R.psiT_phiadj = psiT_adj;
  R.shifts = r_resolution_shifts(ctx, 6);

  ResolutionChecks& ch = res.checks;
  ch.p_compositions = all_zero(P.d1.matrix * P.d2.matrix) && all_zero(P.d2.matrix * P.d3.matrix);
  ch.r_compositions = all_divisible(R.xT * R.psiT_phiadj, ctx.f) &&
                      all_divisible(R.psiT_phiadj * R.phi, ctx.f) &&
                      all_divisible(R.phi * R.phi_adj, ctx.f) && all_divisible(R.phi_adj * R.phi, ctx.f);
  const PolyMatrix ufI = PolyMatrix::identity(ring, n).scaled(uf);
  ch.matrix_factorization = R.phi * R.phi_adj == ufI && R.phi_adj * R.phi == ufI;

  GradedMap r1{R.xT, {0}, {q, q, q}};
  GradedMap r2{R.psiT_phiadj, {q, q, q}, std::vector<std::uint64_t>(n, ctx.b)};
  GradedMap r3{R.phi, std::vector<std::uint64_t>(n, ctx.b), std::vector<std::uint64_t>(n, ctx.b + 1)};
  GradedMap r4{R.phi_adj, std::vector<std::uint64_t>(n, ctx.b + 1), std::vector<std::uint64_t>(n, ctx.b + ctx.d)};
  ch.homogeneous = P.d1.is_homogeneous() && P.d2.is_homogeneous() && P.d3.is_homogeneous() &&
                   r1.is_homogeneous() && r2.is_homogeneous() && r3.is_homogeneous() &&
                   r4.is_homogeneous();

  const auto hilbert = quotient_hilbert(ctx.f, q, opts);
  const std::uint64_t last = std::max<std::uint64_t>({hilbert.size() - 1, ctx.b + 4, 3 * (q - 1)});
  ch.euler = true;
  for (std::uint64_t i = 0; i <= last; ++i) {
    const std::int64_t want = i < hilbert.size() ? static_cast<std::int64_t>(hilbert[i]) : 0;
    if (euler_characteristic(P, i) != want) {
      ch.euler = false;
      ch.euler_failing_degree = i;
      break;
    }
  }
  ch.euler_checked_through = last;
  return res;
}

Resolutions build_resolutions(const StructuralContext& ctx, const RunOptions& opts) {
  Resolutions res = assemble_resolutions(ctx, opts);
  const auto& ch = res.checks;
  if (!ch.p_compositions) throw ConsistencyError("P-resolution differentials do not compose to zero");
  if (!ch.r_compositions) throw ConsistencyError("R-resolution compositions are not zero mod f");
  if (!ch.matrix_factorization) throw ConsistencyError("phi phi^adj != u f I");
  if (!ch.homogeneous) throw ConsistencyError("a differential is not homogeneous for its shifts");
  if (!ch.euler)
    throw ConsistencyError("Euler characteristic differs from the Hilbert function in degree " +
                           std::to_string(*ch.euler_failing_degree));
  return res;
}

bool tails_identical(const StructuralContext& a, const StructuralContext& b) {
  return a.varphi == b.varphi && a.varphi_adj == b.varphi_adj;
}

bool verify_generation(const StructuralContext& ctx, const MaximalPfaffians& pfs,
                       const RunOptions& opts) {
  const std::uint64_t q = ctx.fp.q;
  const PrimeModulus m = ctx.modulus;
  const QuotientBasis qb(q);
  const std::uint64_t t = ctx.s / 2 + 1;
  const auto k = kernel_dims(ctx.f, q, ctx.s + 1, opts);
  for (std::uint64_t i = 0; i < t; ++i)
    if (k[i] != 0) return false;

  // Images of the first 2d Pfaffians in standard coordinates of degree t.
  FpMatrix span(m, 0, qb.dim(t));
  for (std::size_t l = 0; l < 2 * ctx.d; ++l) {
    std::vector<std::uint32_t> row(qb.dim(t), 0);
    for (const auto& term : pfs.values[l].terms()) {
      if (term.mono.degree() != t) return false;
      if (auto idx = qb.index_of(term.mono)) row[*idx] = term.coef;
    }
    span.append_row(row);
  }
  for (std::uint64_t i = t;; ++i) {
    const auto piv = span.eliminate(false);
    if (piv.size() != k[i]) return false;
    if (i == ctx.s + 1) return true;
    FpMatrix next(m, 0, qb.dim(i + 1));
    const auto& monos = qb.monomials(i);
    for (std::size_t r = 0; r < piv.size(); ++r)
      for (unsigned v = 0; v < 3; ++v) {
        std::vector<std::uint32_t> row(qb.dim(i + 1), 0);
        for (std::size_t c = 0; c < monos.size(); ++c) {
          if (!span(r, c)) continue;
          Monomial mono = monos[c];
          mono.set(v, mono[v] + 1);
          if (auto idx = qb.index_of(mono)) row[*idx] = span(r, c);
        }
        next.append_row(row);
      }
    span = std::move(next);
  }
}

SpotCheck spot_check(const StructuralContext& ctx, std::size_t trials, std::uint64_t seed) {
  const PrimeModulus m = ctx.modulus;
  std::mt19937_64 rng(seed);
  SpotCheck out{trials, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<FieldElem> pt;
    for (int v = 0; v < 3; ++v) pt.push_back(FieldElem::from_canonical(static_cast<std::uint32_t>(rng() % m.value()), m));
    const FieldMatrix phi = evaluate(ctx.varphi, pt);
    const FieldMatrix psi = evaluate(ctx.psi, pt);
    const FieldMatrix Phi = evaluate(ctx.Phi, pt);
    const FieldMatrix X = evaluate(ctx.X, pt);
    const FieldElem uf = ctx.u * ctx.f.evaluate(pt);
    const bool pf_ok = pfaffian(phi) == uf;
    const bool key_ok = psi.transpose() * pfaffian_adjoint(phi) * psi + Phi.scaled(uf) == X.scaled(ctx.u);
    if (!pf_ok || !key_ok) ++out.failures;
  }
  return out;
}

std::vector<LedgerEntry> structural_battery(PrimeModulus m, unsigned D,
                                            const std::vector<std::uint64_t>& qs,
                                            const RunOptions& opts, std::size_t trials,
                                            std::uint64_t seed) {
  if (qs.empty()) throw std::invalid_argument("at least one q is required");
  std::vector<LedgerEntry> ledger;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    ledger.push_back({std::move(name), pass, std::move(detail)});
  };
  std::vector<StructuralContext> contexts;
  for (auto q : qs) contexts.push_back(build_context(m, q, D));

  for (const auto& ctx : contexts) {
    const std::string tag = " [q=" + std::to_string(ctx.fp.q) + "]";
    add("pf_phi_equals_uf" + tag, true, "checked while building the context");
    const auto key = verify_key_identity(ctx);
    add("key_identity" + tag, key.holds, key.detail);
    const auto pfs = maximal_pfaffians(ctx);
    add("last_three_pfaffians" + tag, pfs.last_three_match, "u x^q, u y^q, u z^q");
    add("first_2d_pfaffian_degrees" + tag, pfs.first_degrees_match,
        std::to_string(pfs.nonzero_first) + " nonzero of degree " + std::to_string(ctx.s / 2 + 1));
    bool in_colon = true;
    const ColonPiece piece = colon_piece(ctx.f, ctx.fp.q, ctx.s / 2 + 1);
    for (std::size_t l = 0; l < 2 * ctx.d; ++l) in_colon = in_colon && piece.contains(pfs.values[l]);
    add("pfaffians_in_colon" + tag, in_colon);
    add("pfaffians_generate_colon" + tag, verify_generation(ctx, pfs, opts));
    const auto res = assemble_resolutions(ctx, opts);
    const auto& ch = res.checks;
    add("p_resolution_compositions" + tag, ch.p_compositions);
    add("r_resolution_compositions_mod_f" + tag, ch.r_compositions);
    add("matrix_factorization" + tag, ch.matrix_factorization);
    add("homogeneous_differentials" + tag, ch.homogeneous);
    add("euler_characteristic" + tag, ch.euler,
        ch.euler ? "degrees 0.." + std::to_string(ch.euler_checked_through)
                 : "first failure in degree " + std::to_string(*ch.euler_failing_degree));
    const auto spot = spot_check(ctx, trials, seed);
    add("random_evaluation" + tag, spot.failures == 0,
        std::to_string(spot.trials - spot.failures) + "/" + std::to_string(spot.trials) + " points");
  }
  for (std::size_t k = 1; k < contexts.size(); ++k) {
    const auto& a = contexts[k - 1];
    const auto& b = contexts[k];
    const std::string tag = " [q=" + std::to_string(a.fp.q) + "," + std::to_string(b.fp.q) + "]";
    add("tails_identical" + tag, tails_identical(a, b));
    const auto sa = r_resolution_shifts(a, 6), sb = r_resolution_shifts(b, 6);
    const std::int64_t want = 3 * (static_cast<std::int64_t>(b.fp.q) - static_cast<std::int64_t>(a.fp.q)) / 2;
    bool shift_ok = true;
    for (std::size_t h = 2; h < sa.size(); ++h)
      for (std::size_t j = 0; j < sa[h].size(); ++j)
        shift_ok = shift_ok && static_cast<std::int64_t>(sb[h][j]) - static_cast<std::int64_t>(sa[h][j]) == want;
    add("betti_shift" + tag, shift_ok, "constant shift " + std::to_string(want));
  }
  return ledger;
}

}  // namespace lqc
