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

#include <gtest/gtest.h>

#include <random>

#include "lqc/linalg.hpp"
#include "oracles.hpp"

using namespace lqc;

namespace {

const PrimeModulus kP(101);

FpMatrix random_fp(std::mt19937_64& rng, std::size_t r, std::size_t c, unsigned density = 100) {
  FpMatrix a(kP, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % 100 < density) a(i, j) = static_cast<std::uint32_t>(rng() % 101);
  return a;
}

oracle::Mat to_oracle(const FpMatrix& a) {
  oracle::Mat m(a.rows(), std::vector<std::uint64_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

}  // namespace

TEST(Linalg, RankMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const FpMatrix a = random_fp(rng, 1 + rng() % 9, 1 + rng() % 9, 10 + rng() % 90);
    EXPECT_EQ(a.rank(), oracle::rank_gauss(to_oracle(a), 101));
  }
}

TEST(Linalg, DetMatchesOracle) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const FpMatrix a = random_fp(rng, n, n, 60);
    EXPECT_EQ(a.det().value(), oracle::det_leibniz(to_oracle(a), 101));
  }
}

TEST(Linalg, KernelIsAnnihilatedAndHasRightDimension) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const FpMatrix a = random_fp(rng, 1 + rng() % 7, 1 + rng() % 7, 50);
    const FpMatrix k = a.right_kernel();
    EXPECT_EQ(k.rows(), a.cols() - a.rank());
    if (k.rows() == 0) continue;
    const FpMatrix prod = a * k.transpose();
    EXPECT_EQ(prod, FpMatrix(kP, a.rows(), k.rows()));
    EXPECT_EQ(k.rank(), k.rows());
    const FpMatrix l = a.left_kernel();
    EXPECT_EQ(l.rows(), a.rows() - a.rank());
  }
}

TEST(Linalg, ReducedEchelonHasUnitPivots) {
  std::mt19937_64 rng(10);
  FpMatrix a = random_fp(rng, 6, 9, 70);
  const std::size_t r = a.rank();
  const auto piv = a.eliminate(true);
  ASSERT_EQ(piv.size(), r);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) EXPECT_EQ(a(j, piv[i]), i == j ? 1u : 0u);
}

TEST(Linalg, TransposeAndIdentity) {
  std::mt19937_64 rng(11);
  const FpMatrix a = random_fp(rng, 4, 5);
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(FpMatrix::identity(kP, 4) * a, a);
  EXPECT_EQ(FpMatrix::from_rows(kP, {{-1, 102}}), FpMatrix::from_rows(kP, {{100, 1}}));
}

TEST(Linalg, RowSpaceMembership) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    RowSpace rs(kP, 8);
    FpMatrix gens = random_fp(rng, 1 + rng() % 5, 8, 40);
    for (std::size_t r = 0; r < gens.rows(); ++r)
      rs.insert(std::vector<std::uint32_t>(gens.row(r), gens.row(r) + 8));
    EXPECT_EQ(rs.dim(), gens.rank());
    std::vector<std::uint32_t> combo(8, 0);
    for (std::size_t r = 0; r < gens.rows(); ++r) {
      const std::uint64_t c = rng() % 101;
      for (std::size_t j = 0; j < 8; ++j) combo[j] = static_cast<std::uint32_t>((combo[j] + c * gens(r, j)) % 101);
    }
    EXPECT_TRUE(rs.contains(combo));
    FpMatrix probe = random_fp(rng, 1, 8);
    FpMatrix stacked = gens;
    stacked.append_row(std::vector<std::uint32_t>(probe.row(0), probe.row(0) + 8));
    EXPECT_EQ(rs.contains(std::vector<std::uint32_t>(probe.row(0), probe.row(0) + 8)),
              stacked.rank() == gens.rank());
  }
}
