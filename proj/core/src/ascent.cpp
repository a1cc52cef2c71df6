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

#include "qpulse/ascent.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace qpulse {

std::string_view to_string(GradientRule rule) {
  switch (rule) {
    case GradientRule::Midpoint: return "midpoint";
    case GradientRule::Endpoint: return "endpoint";
    case GradientRule::Simpson: return "simpson";
  }
  return "unknown";
}

std::string_view to_string(Objective objective) {
  return objective == Objective::Phi ? "phi" : "fidelity";
}

std::string_view to_string(Termination reason) {
  return reason == Termination::TargetReached ? "target_reached" : "max_iterations";
}

void OptimizationConfig::validate() const {
  if (!(step_size > 0.0) || !std::isfinite(step_size)) {
    throw std::invalid_argument("optimizer: step size must be positive");
  }
  if (max_iterations < 0) {
    throw std::invalid_argument("optimizer: max_iterations must be >= 0");
  }
  if (!(target_infidelity >= 0.0)) {
    throw std::invalid_argument("optimizer: target infidelity must be >= 0");
  }
}

OptimizationReport ascend(const Evaluator& evaluate, ControlSchedule schedule,
                          const HamiltonianModel& model, const OptimizationConfig& config,
                          const IterationObserver& observer) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<double> trace;
  trace.reserve(static_cast<std::size_t>(config.max_iterations) + 1);
  Termination reason = Termination::MaxIterations;
  int k = 0;
  for (;; ++k) {
    const bool last = k >= config.max_iterations;
    Evaluation eval = evaluate(schedule, !last);
    trace.push_back(eval.fidelity);
    if (observer) observer(k, eval.fidelity);
    if (1.0 - eval.fidelity <= config.target_infidelity) {
      reason = Termination::TargetReached;
      break;
    }
    if (last) break;
    schedule.values() += config.step_size * eval.gradient;
    schedule = clip(std::move(schedule), model);
  }

  const auto stop = std::chrono::steady_clock::now();
  return OptimizationReport{std::move(trace), std::move(schedule), k,
                            std::chrono::duration<double>(stop - start).count(), reason};
}

}  // namespace qpulse
