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

#include "qpulse/grape.hpp"

#include <algorithm>
#include <cmath>

namespace qpulse {
namespace {

void require_matching(const HamiltonianModel& model, const ControlSchedule& schedule) {
  if (static_cast<std::size_t>(schedule.controls()) != model.control_count()) {
    throw DimensionError("schedule has " + std::to_string(schedule.controls()) +
                         " controls, model expects " + std::to_string(model.control_count()));
  }
}

void require_target(const TargetGate& target, Eigen::Index dim) {
  if (target.dim() != dim) {
    throw DimensionError("target gate '" + target.name + "' has dimension " +
                         std::to_string(target.dim()) + ", system has " + std::to_string(dim));
  }
}

}  // namespace

PropagatorChain propagate(const HamiltonianModel& model, const UncertaintySample& sample,
                          const ControlSchedule& schedule) {
  require_matching(model, schedule);
  const Eigen::Index n = schedule.intervals();
  PropagatorChain chain;
  chain.dt = schedule.dt();
  chain.half_steps.reserve(static_cast<std::size_t>(n));
  chain.steps.reserve(static_cast<std::size_t>(n));
  chain.forward.reserve(static_cast<std::size_t>(n) + 1);
  chain.forward.push_back(identity(model.dim()));
  const Complex minus_i_half_dt(0.0, -0.5 * chain.dt);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto u = schedule.column(j);
    const CMatrix h = hamiltonian_at(model, sample, u);
    CMatrix half = expm(minus_i_half_dt * h);
    CMatrix step = half * half;
    chain.forward.push_back(step * chain.forward.back());
    chain.half_steps.push_back(std::move(half));
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

double fidelity(const TargetGate& target, const CMatrix& u) {
  const double f = std::abs(hs_inner(target.matrix, u)) / static_cast<double>(target.dim());
  return std::clamp(f, 0.0, 1.0);
}

double phi(const TargetGate& target, const CMatrix& u) {
  return std::norm(hs_inner(target.matrix, u));
}

RealTable SampleEvaluation::fidelity_gradient() const {
  const double mod = std::abs(overlap);
  if (mod == 0.0) return RealTable::Zero(phi_gradient.rows(), phi_gradient.cols());
  return phi_gradient / (2.0 * mod * normalization);
}

SampleEvaluation evaluate_unitary(const HamiltonianModel& model, const UncertaintySample& sample,
                                  const ControlSchedule& schedule, const TargetGate& target,
                                  GradientRule rule, bool with_gradient) {
  require_target(target, model.dim());
  const PropagatorChain chain = propagate(model, sample, schedule);
  const CMatrix& ut = chain.terminal();

  SampleEvaluation out;
  out.overlap = hs_inner(target.matrix, ut);
  out.normalization = static_cast<double>(target.dim());
  out.fidelity = std::clamp(std::abs(out.overlap) / out.normalization, 0.0, 1.0);
  if (!with_gradient) return out;

  const auto controls = static_cast<Eigen::Index>(model.control_count());
  const Eigen::Index n = schedule.intervals();
  std::vector<CMatrix> scaled_ops;
  scaled_ops.reserve(model.control_count());
  for (const auto& c : model.controls()) scaled_ops.push_back(sample.epsilon(c.channel) * c.op);

  // B_j = A_j U(T)^dagger U_F
  const CMatrix w = ut.adjoint() * target.matrix;
  const Complex i_dt(0.0, chain.dt);
  out.phi_gradient.resize(controls, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const CMatrix& a = chain.forward[static_cast<std::size_t>(j) + 1];
    const CMatrix b = a * w;
    const Complex ab = hs_inner(a, b);
    // <B_j| X A_j> = tr(B_j^dagger X A_j) = tr(P X) with P = A_j B_j^dagger;
    // for the midpoint rule X = V H V^dagger so tr(V^dagger P V H); Simpson
    // adds the interval start, X = U H U^dagger, and end, X = H.
    CMatrix p = a * b.adjoint();
    const auto idx = static_cast<std::size_t>(j);
    if (rule == GradientRule::Midpoint) {
      const CMatrix& v = chain.half_steps[idx];
      p = v.adjoint() * p * v;
    } else if (rule == GradientRule::Simpson) {
      const CMatrix& v = chain.half_steps[idx];
      const CMatrix& u = chain.steps[idx];
      p = (u.adjoint() * p * u + 4.0 * (v.adjoint() * p * v) + p) / 6.0;
    }
    for (Eigen::Index m = 0; m < controls; ++m) {
      const Complex bha = p.transpose().cwiseProduct(scaled_ops[static_cast<std::size_t>(m)]).sum();
      out.phi_gradient(m, j) = -2.0 * (i_dt * bha * ab).real();
    }
  }
  return out;
}

RealTable gradient(const HamiltonianModel& model, const UncertaintySample& sample,
                   const ControlSchedule& schedule, const TargetGate& target, GradientRule rule) {
  return evaluate_unitary(model, sample, schedule, target, rule, true).phi_gradient;
}

OptimizationReport optimize(const HamiltonianModel& model, const UncertaintySample& sample,
                            const ControlSchedule& initial, const TargetGate& target,
                            const OptimizationConfig& config, const IterationObserver& observer) {
  const Evaluator evaluate = [&](const ControlSchedule& s, bool with_gradient) {
    SampleEvaluation e = evaluate_unitary(model, sample, s, target, config.rule, with_gradient);
    Evaluation out{e.fidelity, {}};
    if (with_gradient) {
      out.gradient =
          config.objective == Objective::Phi ? std::move(e.phi_gradient) : e.fidelity_gradient();
    }
    return out;
  };
  return ascend(evaluate, initial, model, config, observer);
}

}  // namespace qpulse
