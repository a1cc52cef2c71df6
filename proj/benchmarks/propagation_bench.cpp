/* Copyright 2026 The qpulse Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include <random>

#include "qpulse/experiment.hpp"
#include "qpulse/grape.hpp"
#include "qpulse/lindblad.hpp"
#include "qpulse/slc.hpp"

namespace {

using namespace qpulse;

CMatrix random_anti_hermitian(Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  CMatrix m(d, d);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(n(rng), n(rng));
  return Complex(0.0, -0.5) * (m + m.adjoint());
}

void BM_Expm(benchmark::State& state) {
  const CMatrix a = random_anti_hermitian(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(expm(a));
}
BENCHMARK(BM_Expm)->Arg(2)->Arg(4)->Arg(16);

void BM_Propagate(benchmark::State& state) {
  const ExperimentConfig c = preset_config(state.range(0) == 1 ? "one_qubit_H_optimal" : "cnot_optimal");
  const HamiltonianModel m = c.hamiltonian();
  const ControlSchedule s = c.initial_schedule();
  for (auto _ : state) benchmark::DoNotOptimize(propagate(m, {}, s));
  state.SetItemsProcessed(state.iterations() * s.intervals());
}
BENCHMARK(BM_Propagate)->Arg(1)->Arg(2);

void BM_Gradient(benchmark::State& state) {
  const ExperimentConfig c = preset_config("one_qubit_H_optimal");
  const HamiltonianModel m = c.hamiltonian();
  const ControlSchedule s = c.initial_schedule();
  const TargetGate t = c.target_gate();
  const auto rule = static_cast<GradientRule>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gradient(m, {}, s, t, rule));
  state.SetLabel(std::string(to_string(rule)));
}
BENCHMARK(BM_Gradient)
    ->Arg(static_cast<int>(GradientRule::Midpoint))
    ->Arg(static_cast<int>(GradientRule::Endpoint))
    ->Arg(static_cast<int>(GradientRule::Simpson));

void BM_AugmentedGradient(benchmark::State& state) {
  const ExperimentConfig c = preset_config(state.range(0) == 1 ? "one_qubit_S_robust" : "cnot_robust");
  const HamiltonianModel m = c.hamiltonian();
  const ControlSchedule s = c.initial_schedule();
  const TargetGate t = c.target_gate();
  const auto grid = training_grid(c.uncertainty);
  for (auto _ : state) benchmark::DoNotOptimize(augmented_gradient(m, grid, s, t, Objective::Fidelity));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_AugmentedGradient)->Arg(1)->Arg(2);

void BM_OpenGradient(benchmark::State& state) {
  const ExperimentConfig c = preset_config("flux_qubit_open");
  const LindbladModel m = c.lindblad();
  const ControlSchedule s = c.initial_schedule();
  const OpenTarget t = make_open_target(c.target_gate());
  for (auto _ : state) benchmark::DoNotOptimize(open_gradient(m, {}, s, t));
}
BENCHMARK(BM_OpenGradient);

}  // namespace

BENCHMARK_MAIN();
