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

#include <vector>

#include "qpulse/ascent.hpp"
#include "qpulse/model.hpp"
#include "qpulse/pulse.hpp"

namespace qpulse {

/// U(T) = U_N ... U_1 with U_j = exp(-i H_j dt).
struct PropagatorChain {
  double dt = 0.0;
  std::vector<CMatrix> half_steps;  // V_j = exp(-i H_j dt / 2), U_j = V_j V_j
  std::vector<CMatrix> steps;       // U_j
  std::vector<CMatrix> forward;     // forward[j] = A_j = U_j ... U_1, forward[0] = I

  const CMatrix& terminal() const { return forward.back(); }
};

PropagatorChain propagate(const HamiltonianModel& model, const UncertaintySample& sample,
                          const ControlSchedule& schedule);

/// F = |tr(U_F^dagger U)| / 2^q, clamped to [0, 1].
double fidelity(const TargetGate& target, const CMatrix& u);

/// Phi = |tr(U_F^dagger U)|^2; equals (2^q F)^2.
double phi(const TargetGate& target, const CMatrix& u);

/// Objective values and Phi-gradient for one uncertainty sample.
struct SampleEvaluation {
  double fidelity = 0.0;
  Complex overlap;             // z = tr(U_F^dagger U(T))
  double normalization = 1.0;  // F = |z| / normalization
  RealTable phi_gradient;      // dPhi/du(m, j); empty unless requested

  double phi() const { return std::norm(overlap); }
  /// dF/du = dPhi/du / (2 |z| normalization); zero where z vanishes.
  RealTable fidelity_gradient() const;
};

SampleEvaluation evaluate_unitary(const HamiltonianModel& model, const UncertaintySample& sample,
                                  const ControlSchedule& schedule, const TargetGate& target,
                                  GradientRule rule, bool with_gradient);

/// dPhi/du_m(j) from the first-order product formula; when control m carries
/// an uncertainty channel its operator enters as eps_m H_m.
RealTable gradient(const HamiltonianModel& model, const UncertaintySample& sample,
                   const ControlSchedule& schedule, const TargetGate& target,
                   GradientRule rule = GradientRule::Simpson);

/// Single-sample unitary GRAPE.
OptimizationReport optimize(const HamiltonianModel& model, const UncertaintySample& sample,
                            const ControlSchedule& initial, const TargetGate& target,
                            const OptimizationConfig& config,
                            const IterationObserver& observer = {});

}  // namespace qpulse
