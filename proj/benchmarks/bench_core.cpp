// Copyright 2026 The qfcs Authors
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

#include <numbers>

#include "qfcs/qfcs.hpp"

using namespace qfcs;

namespace {

constexpr double kPeriod = 2.0 * std::numbers::pi;

void BM_PropagateDrivenQubitPeriod(benchmark::State& state) {
  const SystemModel m = build_driven_qubit(1.0, 0.05, 1.0, 0.007, 2.0);
  const OperatorMatrix rho0 = initial_equilibrium(m);
  const CountingField u = CountingField::uniform(0.7, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(m, u, kPeriod, rho0).matrix);
  }
}
BENCHMARK(BM_PropagateDrivenQubitPeriod);

void BM_AssembleCoupledQubits(benchmark::State& state) {
  const SystemModel m = build_coupled_qubits(5.0, 40.0, 1.0);
  const CountingField u = CountingField::uniform(0.3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble(m, u, 0.0));
  }
}
BENCHMARK(BM_AssembleCoupledQubits);

void BM_CumulantExpansionPair(benchmark::State& state) {
  const SystemModel m = build_coupled_qubits(5.0, 40.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cumulant_expansion(m).fano());
  }
}
BENCHMARK(BM_CumulantExpansionPair);

void BM_DominantEigenvalueOscillator(benchmark::State& state) {
  const SystemModel m = build_rwa_oscillator(1.0, 0.05, 1.0, 0.1, int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dominant_eigenvalue_numeric(m, Complex(0.7)));
  }
}
BENCHMARK(BM_DominantEigenvalueOscillator)->Arg(10)->Arg(14)->Arg(18);

void BM_InvertDistribution(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto grid = counting_grid(1.0, n);
  std::vector<Complex> gf(grid.size());
  for (size_t k = 0; k < grid.size(); ++k) {
    gf[k] = std::exp(0.5 * (std::exp(Complex(0, 1) * grid[k]) - 1.0));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert_distribution(gf, grid, 1.0));
  }
}
BENCHMARK(BM_InvertDistribution)->Arg(64)->Arg(256);

void BM_G2ThreeLevel(benchmark::State& state) {
  const SystemModel m = build_three_level(0.625, 1.0);
  std::vector<double> grid(200);
  for (int i = 0; i < 200; ++i) grid[size_t(i)] = 10.0 * double(i) / 199.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g2_correlator(m, grid));
  }
}
BENCHMARK(BM_G2ThreeLevel);

}  // namespace

BENCHMARK_MAIN();
