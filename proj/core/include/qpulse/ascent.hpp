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
#include <functional>
#include <string_view>
#include <vector>

#include "qpulse/pulse.hpp"

namespace qpulse {

/// Where the control derivative of one interval's propagator is taken.
///
/// Both rules evaluate the first-order product form
///   dPhi/du_m(j) = -2 Re{ <B_j| i dt H_m A_j> <A_j|B_j> }.
/// Endpoint uses H_m as written, which leaves an O(dt) error against the exact
/// derivative. Midpoint transports H_m to the centre of the interval,
/// H_m -> V_j H_m V_j^dagger with V_j the half-interval propagator, which
/// makes the same formula accurate to O(dt^2). Simpson averages the start,
/// centre and end of the interval with weights 1/6, 4/6, 1/6, accurate to
/// O(dt^4) for a few extra matrix products per interval.
enum class GradientRule { Midpoint, Endpoint, Simpson };

/// Which per-sample quantity the ascent follows. Phi is the squared overlap
/// modulus; Fidelity is the normalized modulus itself.
enum class Objective { Phi, Fidelity };

std::string_view to_string(GradientRule rule);
std::string_view to_string(Objective objective);

struct OptimizationConfig {
  double step_size = 0.5;  // alpha in u <- clip(u + alpha * g)
  int max_iterations = 200;
  double target_infidelity = 0.0;  // stop once 1 - F <= this
  std::uint64_t seed = 0;
  GradientRule rule = GradientRule::Simpson;
  Objective objective = Objective::Phi;

  void validate() const;
};

enum class Termination { TargetReached, MaxIterations };

std::string_view to_string(Termination reason);

struct OptimizationReport {
  std::vector<double> fidelity_trace;  // entry k is the fidelity after k updates
  ControlSchedule schedule;
  int iterations = 0;  // updates applied
  double wall_seconds = 0.0;
  Termination reason = Termination::MaxIterations;

  double final_fidelity() const { return fidelity_trace.back(); }
};

/// Fidelity of the current schedule, plus the ascent direction when requested.
struct Evaluation {
  double fidelity = 0.0;
  RealTable gradient;
};

using Evaluator = std::function<Evaluation(const ControlSchedule&, bool with_gradient)>;
using IterationObserver = std::function<void(int iteration, double fidelity)>;

/// Fixed-step projected gradient ascent shared by every backend.
///
/// Iteration k records the fidelity of the current schedule, stops when the
/// infidelity is at or below the threshold or k reaches max_iterations, and
/// otherwise applies u <- clip(u + alpha * g).
OptimizationReport ascend(const Evaluator& evaluate, ControlSchedule schedule,
                          const HamiltonianModel& model, const OptimizationConfig& config,
                          const IterationObserver& observer = {});

}  // namespace qpulse
