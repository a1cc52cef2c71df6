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

#include <span>
#include <vector>

#include "qpulse/ascent.hpp"
#include "qpulse/grape.hpp"
#include "qpulse/model.hpp"
#include "qpulse/pulse.hpp"

namespace qpulse {

/// G(T) = G_N ... G_1 with G_j = exp(L_j dt) acting on column-stacked vec(rho).
struct ChannelChain {
  double dt = 0.0;
  std::vector<CMatrix> half_steps;  // exp(L_j dt / 2)
  std::vector<CMatrix> steps;
  std::vector<CMatrix> forward;  // forward[0] = I, forward[j] = G_j ... G_1

  const CMatrix& terminal() const { return forward.back(); }
};

ChannelChain propagate_channel(const LindbladModel& model, const UncertaintySample& sample,
                               const ControlSchedule& schedule);

enum class OpenNormalization {
  Lifted,   // |tr(S_F^dagger G)| / 4^q; equals 1 for the exact unitary channel
  Literal,  // |tr(S_F^dagger G)| / 2^q; can exceed 1, kept for comparison only
};

/// Target channel S_F = conj(U_F) kron U_F, so S_F vec(rho) = vec(U_F rho U_F^dagger).
struct OpenTarget {
  TargetGate gate;
  CMatrix lifted;
  double normalization = 1.0;
};

OpenTarget make_open_target(const TargetGate& gate,
                            OpenNormalization norm = OpenNormalization::Lifted);

double open_fidelity(const OpenTarget& target, const CMatrix& channel);

/// Objective values for one sample; phi_gradient is d|tr(S_F^dagger G(T))|^2/du.
///
/// Adjoints are propagated backwards, B_{j-1} = G_j^dagger B_j with B_N = S_F,
/// which reduces to A_j G(T)^dagger S_F whenever the steps are unitary.
SampleEvaluation evaluate_open(const LindbladModel& model, const UncertaintySample& sample,
                               const ControlSchedule& schedule, const OpenTarget& target,
                               GradientRule rule, bool with_gradient);

RealTable open_gradient(const LindbladModel& model, const UncertaintySample& sample,
                        const ControlSchedule& schedule, const OpenTarget& target,
                        GradientRule rule = GradientRule::Simpson);

/// Open-system GRAPE on the mean objective over `samples` (one sample for the
/// plain problem, a training grid for robust design).
OptimizationReport open_optimize(const LindbladModel& model,
                                 std::span<const UncertaintySample> samples,
                                 const ControlSchedule& initial, const OpenTarget& target,
                                 const OptimizationConfig& config,
                                 const IterationObserver& observer = {});

/// Choi matrix sum_ij |i><j| kron E(|i><j|) of a superoperator on d x d matrices.
CMatrix choi_matrix(const CMatrix& superop);

}  // namespace qpulse
