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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qpulse/ascent.hpp"
#include "qpulse/grape.hpp"
#include "qpulse/lindblad.hpp"
#include "qpulse/model.hpp"

namespace qpulse {

/// Cartesian product over channels of the cell midpoints
///   eps = (1 - E) + (E / N_k)(2m - 1),  m = 1..N_k.
/// A channel with E = 0 contributes the single value 1.
std::vector<UncertaintySample> training_grid(const UncertaintyModel& uncertainty);

/// Random test draws, one epsilon per channel per sample, in channel order
/// from a single mt19937_64 seeded with `seed`. Gaussian channels use mean 1,
/// standard deviation E / 2, truncated to [1 - E, 1 + E] by rejection.
std::vector<UncertaintySample> draw_samples(const UncertaintyModel& uncertainty, std::size_t count,
                                            std::uint64_t seed);

/// F_N = (1/N) sum_n F(U_F, U_n(T)).
double augmented_fidelity(const HamiltonianModel& model, std::span<const UncertaintySample> samples,
                          const ControlSchedule& schedule, const TargetGate& target);

/// Sample mean of the per-sample ascent directions (Phi- or F-gradients).
RealTable augmented_gradient(const HamiltonianModel& model,
                             std::span<const UncertaintySample> samples,
                             const ControlSchedule& schedule, const TargetGate& target,
                             Objective objective = Objective::Phi,
                             GradientRule rule = GradientRule::Simpson);

/// Evaluators over the augmented system; the reduction runs in sample order.
Evaluator make_unitary_evaluator(const HamiltonianModel& model,
                                 std::span<const UncertaintySample> samples,
                                 const TargetGate& target, const OptimizationConfig& config);
Evaluator make_open_evaluator(const LindbladModel& model,
                              std::span<const UncertaintySample> samples,
                              const OpenTarget& target, const OptimizationConfig& config);

OptimizationReport train(const HamiltonianModel& model, const UncertaintyModel& uncertainty,
                         const ControlSchedule& initial, const TargetGate& target,
                         const OptimizationConfig& config, const IterationObserver& observer = {});
OptimizationReport train(const LindbladModel& model, const UncertaintyModel& uncertainty,
                         const ControlSchedule& initial, const OpenTarget& target,
                         const OptimizationConfig& config, const IterationObserver& observer = {});

struct TestReport {
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;  // population standard deviation
  double histogram_lo = 0.0;
  double histogram_hi = 0.0;
  std::vector<std::size_t> histogram;  // equal-width buckets over [lo, hi]
  std::uint64_t seed = 0;

  friend bool operator==(const TestReport&, const TestReport&) = default;
};

inline constexpr std::size_t kHistogramBuckets = 10;

TestReport summarize(std::span<const double> fidelities, std::uint64_t seed);

TestReport test(const HamiltonianModel& model, const UncertaintyModel& uncertainty,
                const ControlSchedule& schedule, const TargetGate& target, std::size_t count,
                std::uint64_t seed);
TestReport test(const LindbladModel& model, const UncertaintyModel& uncertainty,
                const ControlSchedule& schedule, const OpenTarget& target, std::size_t count,
                std::uint64_t seed);

/// Pretty-printed JSON object with every statistic and the seed.
std::string to_json(const TestReport& report);

}  // namespace qpulse
