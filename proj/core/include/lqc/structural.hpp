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
#include <optional>
#include <string>
#include <vector>

#include "lqc/colon.hpp"
#include "lqc/ff.hpp"
#include "lqc/matrix.hpp"
#include "lqc/pfaffian.hpp"
#include "lqc/poly.hpp"

namespace lqc {

/// Leading n x n block of the tridiagonal matrix with diagonal (2i-(d+1))z,
/// superdiagonal i x at (i, i+1) and subdiagonal -(d-j) y at (j+1, j).
/// Any d >= 1 and n >= 0 are accepted.
PolyMatrix build_L(std::size_t n, unsigned d, PrimeModulus m);

/// The full d x d matrix; d must be even and at least 2.
PolyMatrix build_M(unsigned d, PrimeModulus m);

/// Closed form for det L_n: with n = 2N + nu,
/// A_n = z^nu sum_t a_{t,N,nu} (xy)^{N-t} F^t.
Poly A_closed_form(std::size_t n, unsigned d, PrimeModulus m);

/// det L_n = (n-1)(d-n+1) xy det L_{n-2} - (d-2n+1) z det L_{n-1} for 2 <= n <= n_max.
bool verify_L_recurrence(std::size_t n_max, unsigned d, PrimeModulus m);

struct MinorsOfM {
  Poly det_M;
  Poly det_drop_d1;  // row d and column 1 removed
  Poly det_drop_1d;  // row 1 and column d removed
  Poly det_drop_11;
  Poly det_drop_dd;
};

/// Computes the five determinants generically and compares each with its
/// closed form; throws ConsistencyError on any mismatch. Requires p > d - 1.
MinorsOfM minors_of_M(unsigned d, PrimeModulus m);

struct StructuralContext {
  PrimeModulus modulus;
  FrobeniusPower fp;
  unsigned D = 0;
  unsigned d = 0;
  std::uint64_t pi = 0;
  std::uint64_t s = 0;      // 3(q-1) - d
  std::uint64_t b = 0;      // (3q + d - 1) / 2
  std::uint64_t e = 0;      // pi - (D - 1), the degree of psi
  PolyRing ring;
  Poly x, y, z;
  Poly F, f, g, G;
  FieldElem u;
  FieldElem lambda_D;
  PolyMatrix M;
  PolyMatrix varphi;
  PolyMatrix varphi_adj;
  PolyMatrix psi;
  PolyMatrix Phi;
  PolyMatrix X;
  std::vector<Poly> frobenius_generators;  // x^q, y^q, z^q
};

/// Assembles every block for f = (xy - z^2)^D. Needs p > 2D - 1 and q >= 2D + 1.
/// Pf(phi) = u f is checked here and a mismatch throws ConsistencyError.
StructuralContext build_context(PrimeModulus m, std::uint64_t q, unsigned D);

/// [[phi, psi], [-psi^T, Phi]], checked skew-symmetric of size 2d + 3.
PolyMatrix build_partial2(const StructuralContext& ctx);

struct IdentityCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;  // 1-based
  std::string detail;
};

/// psi^T phi^adj psi + u f Phi == u X, entry by entry.
IdentityCheck verify_key_identity(const StructuralContext& ctx);

struct MaximalPfaffians {
  std::vector<Poly> values;        // Pf_l(d2) for l = 1 .. 2d + 3
  bool last_three_match = false;   // equal u x^q, u y^q, u z^q
  bool first_degrees_match = false;  // homogeneous of degree s/2 + 1 or zero
  std::size_t nonzero_first = 0;
};

MaximalPfaffians maximal_pfaffians(const StructuralContext& ctx);

/// Graded map F_k -> F_{k-1}: rows follow the target basis, columns the source.
struct GradedMap {
  PolyMatrix matrix;
  std::vector<std::uint64_t> target_shifts;
  std::vector<std::uint64_t> source_shifts;

  bool is_homogeneous() const;
};

struct ResolutionP {
  GradedMap d1, d2, d3;
  std::vector<Poly> bvec;  // Pf_1 .. Pf_2d of d2
  std::vector<std::vector<std::uint64_t>> shifts;  // F_0 .. F_3
};

struct ResolutionR {
  PolyMatrix xT, psiT_phiadj, phi, phi_adj;
  // Shifts of F_0, F_1, F_2, ... up to the requested length.
  std::vector<std::vector<std::uint64_t>> shifts;
};

struct ResolutionChecks {
  bool p_compositions = false;
  bool r_compositions = false;
  bool matrix_factorization = false;
  bool homogeneous = false;
  bool euler = false;
  std::optional<std::uint64_t> euler_failing_degree;
  std::uint64_t euler_checked_through = 0;
};

struct Resolutions {
  ResolutionP P;
  ResolutionR R;
  ResolutionChecks checks;
};

/// Shift sequence of the R-resolution: 0; q; b; b+1; b+d; b+d+1; ...
std::vector<std::vector<std::uint64_t>> r_resolution_shifts(const StructuralContext& ctx,
                                                           std::size_t length);

/// Hilbert function of P/(f, m^[q]) predicted by the P-resolution.
std::int64_t euler_characteristic(const ResolutionP& res, std::uint64_t i);

/// Builds both resolutions and records the outcome of every check.
Resolutions assemble_resolutions(const StructuralContext& ctx, const RunOptions& opts = {});

/// As assemble_resolutions, but any failed check throws ConsistencyError
/// naming the failing item.
Resolutions build_resolutions(const StructuralContext& ctx, const RunOptions& opts = {});

/// phi and phi^adj agree entry by entry.
bool tails_identical(const StructuralContext& a, const StructuralContext& b);

/// m^[q] : f is generated by the maximal Pfaffians: closing their span under
/// multiplication by x, y, z reproduces every graded piece up to s + 1.
bool verify_generation(const StructuralContext& ctx, const MaximalPfaffians& pfs,
                       const RunOptions& opts = {});

/// Evaluates Pf(phi) = u f and the key identity at random points of F_p^3.
struct SpotCheck {
  std::size_t trials = 0;
  std::size_t failures = 0;
};
SpotCheck spot_check(const StructuralContext& ctx, std::size_t trials, std::uint64_t seed);

struct LedgerEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The full battery over a list of q values, including tail comparison.
std::vector<LedgerEntry> structural_battery(PrimeModulus m, unsigned D,
                                            const std::vector<std::uint64_t>& qs,
                                            const RunOptions& opts = {}, std::size_t trials = 50,
                                            std::uint64_t seed = 1);

}  // namespace lqc
