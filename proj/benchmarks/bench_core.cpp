// Copyright 2026 The gfqsim Authors.
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

#include <random>

#include "gfq/circuit_model.hpp"
#include "gfq/cqed.hpp"
#include "gfq/landscape.hpp"
#include "gfq/observables.hpp"
#include "gfq/spectrum.hpp"

namespace {

const gfq::FluxBias kFlux{0.94, 0.94, 0.2};
const gfq::WindingNumbers kWind{-1, -1, 1};

void BM_WaveVectors(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const gfq::InductanceSet ind;
  const gfq::PhaseState s{u(rng), u(rng), u(rng), u(rng), 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(gfq::wave_vectors(ind, kFlux, kWind, s, 0.01));
}
BENCHMARK(BM_WaveVectors);

void BM_UeffGradient(benchmark::State& state) {
  const gfq::CircuitParams p;
  const gfq::PhaseState s{0.3, -0.2, 0.1, 0.05, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(gfq::u_eff_gradient(p, s, 0.001));
}
BENCHMARK(BM_UeffGradient);

void BM_FindMinimaReduced(benchmark::State& state) {
  const gfq::ReducedPotential v(2.0, kFlux, kWind);
  for (auto _ : state) benchmark::DoNotOptimize(gfq::find_minima(v));
}
BENCHMARK(BM_FindMinimaReduced)->Unit(benchmark::kMillisecond);

void BM_FindMinimaFull(benchmark::State& state) {
  const gfq::FullPotential v{gfq::CircuitParams{}};
  for (auto _ : state) benchmark::DoNotOptimize(gfq::find_minima(v));
}
BENCHMARK(BM_FindMinimaFull)->Unit(benchmark::kMillisecond);

void BM_GridScan(benchmark::State& state) {
  const gfq::ReducedPotential v(2.0, kFlux, kWind);
  gfq::GridSpec g;
  g.phi_p_points = g.phitilde_m_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gfq::grid_scan(v, g));
}
BENCHMARK(BM_GridScan)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_Gap1D(benchmark::State& state) {
  const gfq::ReducedPotential v(2.0, kFlux, kWind);
  gfq::Grid1D g;
  g.points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gfq::tunneling_gap_1d(v, 40.0, g));
}
BENCHMARK(BM_Gap1D)->Arg(1001)->Arg(2001)->Arg(4001)->Unit(benchmark::kMillisecond);

void BM_Splitting2D(benchmark::State& state) {
  const gfq::ReducedPotential v(2.0, kFlux, kWind);
  gfq::Grid2D g;
  g.nx = g.ny = static_cast<int>(state.range(0));
  const gfq::MassModel m = gfq::MassModel::from_charging_energy(1.0 / 40.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gfq::splitting_2d([&v](double x, double y) { return v(x, y); }, m, g));
  }
}
BENCHMARK(BM_Splitting2D)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_GCurve(benchmark::State& state) {
  std::vector<double> fas;
  for (int k = 0; k <= 50; ++k) fas.push_back(0.01 * k);
  for (auto _ : state) benchmark::DoNotOptimize(gfq::g_curve({1.5, 2.0, 2.5}, fas));
}
BENCHMARK(BM_GCurve);

void BM_Propagator(benchmark::State& state) {
  const gfq::OperatorMatrix h = gfq::build_qubit_resonator_h(1.0, 0.01, 1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gfq::Propagator(h));
}
BENCHMARK(BM_Propagator)->Arg(10)->Arg(40);

void BM_ExchangeSplitting(benchmark::State& state) {
  const gfq::TwoQubitParams p{1.5, 1.5, 0.025, 0.025, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(gfq::exchange_splitting_exact(p, 6));
}
BENCHMARK(BM_ExchangeSplitting);

}  // namespace

BENCHMARK_MAIN();
