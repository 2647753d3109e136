// Copyright 2026 The opabs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "opabs/opabs.hpp"

namespace opabs {
namespace {

ComplexMatrix psd_input(std::size_t n) {
  const ComplexMatrix g = gen_general(n, Seed{1, "bench", n});
  return adjoint(g) * g;
}

void BM_HermitianEigen(benchmark::State& state) {
  const ComplexMatrix h = psd_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(h));
}
BENCHMARK(BM_HermitianEigen)->RangeMultiplier(2)->Range(2, 32);

void BM_PsdSqrt(benchmark::State& state) {
  const ComplexMatrix p = psd_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psd_sqrt(PsdMatrix::from(p)));
}
BENCHMARK(BM_PsdSqrt)->RangeMultiplier(2)->Range(2, 32);

void BM_PsdSqrtIterative(benchmark::State& state) {
  const PsdMatrix p = PsdMatrix::from(psd_input(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(psd_sqrt_iterative(p));
}
BENCHMARK(BM_PsdSqrtIterative)->RangeMultiplier(2)->Range(2, 32);

void BM_AbsValue(benchmark::State& state) {
  const ComplexMatrix a = gen_general(static_cast<std::size_t>(state.range(0)), Seed{2, "bench", 0});
  for (auto _ : state) benchmark::DoNotOptimize(abs_value(a));
}
BENCHMARK(BM_AbsValue)->RangeMultiplier(2)->Range(2, 32);

void BM_CheckClaim(benchmark::State& state) {
  const Claim& claim = find_claim("C-EIGHT");
  const ClaimInstance inst =
      draw_instance(claim, static_cast<std::size_t>(state.range(0)), Seed{3, "bench", 0});
  for (auto _ : state) benchmark::DoNotOptimize(check_claim(inst));
}
BENCHMARK(BM_CheckClaim)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
}  // namespace opabs

BENCHMARK_MAIN();
