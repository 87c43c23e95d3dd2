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

#include <benchmark/benchmark.h>

#include <random>

#include "lqc/colon.hpp"
#include "lqc/linalg.hpp"
#include "lqc/pfaffian.hpp"
#include "lqc/structural.hpp"

using namespace lqc;

namespace {

const char* kQuartic = "x^4+x^3*y+x^3*z+y^2*z^2";

void BM_IsLqcQuartic(benchmark::State& st) {
  const Poly f = parse_poly(kQuartic, PrimeModulus(3));
  const auto q = static_cast<std::uint64_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(is_lqc(f, q).lqc);
}
BENCHMARK(BM_IsLqcQuartic)->Arg(9)->Arg(27)->Unit(benchmark::kMillisecond);

void BM_GeneratorProfileQuartic(benchmark::State& st) {
  const Poly f = parse_poly(kQuartic, PrimeModulus(3));
  RunOptions opts;
  opts.jobs = static_cast<unsigned>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(generator_profile(f, static_cast<std::uint64_t>(st.range(0)), opts));
}
BENCHMARK(BM_GeneratorProfileQuartic)->Args({27, 1})->Args({27, 4})->Unit(benchmark::kMillisecond);

void BM_QuotientReportConicPower(benchmark::State& st) {
  const PrimeModulus m(5);
  const Poly f = conic(m).pow(static_cast<std::uint64_t>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(quotient_report(f, static_cast<std::uint64_t>(st.range(0))).hk);
}
BENCHMARK(BM_QuotientReportConicPower)->Args({5, 1})->Args({25, 1})->Args({25, 2})->Unit(benchmark::kMillisecond);

void BM_StructuralBattery(benchmark::State& st) {
  const auto p = static_cast<std::uint64_t>(st.range(0));
  const auto D = static_cast<unsigned>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(structural_battery(PrimeModulus(p), D, {p}, {}, 10, 1).size());
}
BENCHMARK(BM_StructuralBattery)->Args({7, 3})->Args({11, 5})->Unit(benchmark::kMillisecond);

void BM_PfaffianField(benchmark::State& st) {
  const PrimeModulus m(101);
  const auto n = static_cast<std::size_t>(st.range(0));
  std::mt19937_64 rng(1);
  FieldMatrix a(m, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = FieldElem(static_cast<std::int64_t>(rng() % 101), m);
      a(j, i) = -a(i, j);
    }
  for (auto _ : st) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_PfaffianField)->Arg(8)->Arg(12)->Arg(16);

void BM_MaximalPfaffians(benchmark::State& st) {
  const auto p = static_cast<std::uint64_t>(st.range(0));
  const StructuralContext ctx = build_context(PrimeModulus(p), p, static_cast<unsigned>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(maximal_pfaffians(ctx).values.size());
}
BENCHMARK(BM_MaximalPfaffians)->Args({5, 1})->Args({11, 5})->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& st) {
  const PrimeModulus m(32003);
  const auto n = static_cast<std::size_t>(st.range(0));
  std::mt19937_64 rng(2);
  FpMatrix a(m, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<std::uint32_t>(rng() % 32003);
  for (auto _ : st) benchmark::DoNotOptimize(a.rank());
}
BENCHMARK(BM_Rank)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
