// Copyright 2026 The phasedamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "phasedamp/evolution.hpp"
#include "phasedamp/lindblad.hpp"
#include "phasedamp/quasiprob.hpp"
#include "phasedamp/states.hpp"

using namespace phasedamp;

namespace {

void BM_LiouvillianApply(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const auto rho = fock_density(StateSpec::displaced_thermal({1.0, 0.5}, 0.5), cutoff);
  const BathParams bath(1.0, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(apply_liouvillian(rho, bath));
}
BENCHMARK(BM_LiouvillianApply)->Arg(30)->Arg(60)->Arg(120);

void BM_Rk4Integrate(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const auto rho = fock_density(StateSpec::coherent({1.5, 0.0}), cutoff);
  const LindbladSettings settings(cutoff, 1e-3, BathParams(1.0, 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(integrate(rho, settings, 0.1, {0.1}));
}
BENCHMARK(BM_Rk4Integrate)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_TricomiUHalf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tricomi_u_half(n, 0.7));
}
BENCHMARK(BM_TricomiUHalf)->Arg(5)->Arg(30);

void BM_ClosedFormPoint(benchmark::State& state) {
  const auto spec = StateSpec::photon_added_coherent({0.8, -0.4});
  const BathParams bath(1.0, 0.4);
  for (auto _ : state) {
    const auto p = evolve_p_closed_form(spec, bath, 0.5);
    benchmark::DoNotOptimize(evaluate_p(p.form, {0.3, 0.2}));
  }
}
BENCHMARK(BM_ClosedFormPoint);

void BM_NumericConvolution2x2(benchmark::State& state) {
  const auto p0 = initial_p_function(StateSpec::thermal(0.6));
  const BathParams bath(1.0, 0.4);
  const UniformAxis x(0.3, 0.4, 2), y(0.2, 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_p_numeric(p0, bath, 0.5, x, y));
}
BENCHMARK(BM_NumericConvolution2x2)->Unit(benchmark::kMicrosecond);

void BM_PToQSmoothing(benchmark::State& state) {
  const auto p = initial_p_function(StateSpec::photon_added_thermal(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(p_to_q_smoothing(p, {0.4, -0.7}));
}
BENCHMARK(BM_PToQSmoothing);

void BM_WignerGrid(benchmark::State& state) {
  const auto rho = fock_density(StateSpec::photon_added_coherent({1.0, 0.0}), 40);
  const auto n = static_cast<std::size_t>(state.range(0));
  const UniformAxis axis(-6.0, 6.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_from_characteristic(rho, axis, axis));
}
BENCHMARK(BM_WignerGrid)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
