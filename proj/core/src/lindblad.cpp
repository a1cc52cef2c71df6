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

#include "qpulse/lindblad.hpp"

#include <algorithm>
#include <cmath>

#include "qpulse/slc.hpp"

namespace qpulse {

ChannelChain propagate_channel(const LindbladModel& model, const UncertaintySample& sample,
                               const ControlSchedule& schedule) {
  if (static_cast<std::size_t>(schedule.controls()) != model.hamiltonian().control_count()) {
    throw DimensionError("schedule does not match the model's control count");
  }
  const Eigen::Index n = schedule.intervals();
  const Eigen::Index d = model.dim();
  ChannelChain chain;
  chain.dt = schedule.dt();
  chain.half_steps.reserve(static_cast<std::size_t>(n));
  chain.steps.reserve(static_cast<std::size_t>(n));
  chain.forward.reserve(static_cast<std::size_t>(n) + 1);
  chain.forward.push_back(identity(d * d));
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto u = schedule.column(j);
    const CMatrix l = liouvillian(model, sample, u);
    CMatrix half = expm((0.5 * chain.dt) * l);
    CMatrix step = half * half;
    chain.forward.push_back(step * chain.forward.back());
    chain.half_steps.push_back(std::move(half));
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

OpenTarget make_open_target(const TargetGate& gate, OpenNormalization norm) {
  const double d = static_cast<double>(gate.dim());
  return {gate, conjugation_superoperator(gate.matrix),
          norm == OpenNormalization::Lifted ? d * d : d};
}

double open_fidelity(const OpenTarget& target, const CMatrix& channel) {
  const double f = std::abs(hs_inner(target.lifted, channel)) / target.normalization;
  return std::max(f, 0.0);
}

SampleEvaluation evaluate_open(const LindbladModel& model, const UncertaintySample& sample,
                               const ControlSchedule& schedule, const OpenTarget& target,
                               GradientRule rule, bool with_gradient) {
  const Eigen::Index d = model.dim();
  if (target.lifted.rows() != d * d) {
    throw DimensionError("open target does not match the system dimension");
  }
  const ChannelChain chain = propagate_channel(model, sample, schedule);

  SampleEvaluation out;
  out.overlap = hs_inner(target.lifted, chain.terminal());
  out.normalization = target.normalization;
  out.fidelity = std::abs(out.overlap) / target.normalization;
  if (target.normalization == static_cast<double>(d * d)) {
    out.fidelity = std::min(out.fidelity, 1.0);
  }
  if (!with_gradient) return out;

  const auto& controls = model.hamiltonian().controls();
  const auto m_count = static_cast<Eigen::Index>(controls.size());
  const Eigen::Index n = schedule.intervals();
  std::vector<CMatrix> generators;
  generators.reserve(controls.size());
  for (const auto& c : controls) {
    generators.push_back(commutator_superoperator(sample.epsilon(c.channel) * c.op));
  }

  out.phi_gradient.resize(m_count, n);
  const Complex zc = std::conj(out.overlap);
  CMatrix adjoint = target.lifted;  // B_N
  for (Eigen::Index j = n; j-- > 0;) {
    const auto idx = static_cast<std::size_t>(j);
    // d tr(S_F^dagger G(T)) = dt tr(B_j^dagger M A_{j-1}) with M = V K V
    // (midpoint), K G_j (endpoint) or (G K + 4 V K V + K G) / 6 (Simpson);
    // rewritten as tr(P K).
    CMatrix p;
    if (rule == GradientRule::Midpoint) {
      const CMatrix& v = chain.half_steps[idx];
      p = v * chain.forward[idx] * adjoint.adjoint() * v;
    } else if (rule == GradientRule::Simpson) {
      const CMatrix& v = chain.half_steps[idx];
      const CMatrix& g = chain.steps[idx];
      const CMatrix q = chain.forward[idx] * adjoint.adjoint();
      p = (q * g + 4.0 * (v * q * v) + g * q) / 6.0;
    } else {
      p = chain.forward[idx + 1] * adjoint.adjoint();
    }
    for (Eigen::Index m = 0; m < m_count; ++m) {
      const Complex dz =
          chain.dt * p.transpose().cwiseProduct(generators[static_cast<std::size_t>(m)]).sum();
      out.phi_gradient(m, j) = 2.0 * (zc * dz).real();
    }
    adjoint = chain.steps[idx].adjoint() * adjoint;
  }
  return out;
}

RealTable open_gradient(const LindbladModel& model, const UncertaintySample& sample,
                        const ControlSchedule& schedule, const OpenTarget& target,
                        GradientRule rule) {
  return evaluate_open(model, sample, schedule, target, rule, true).phi_gradient;
}

OptimizationReport open_optimize(const LindbladModel& model,
                                 std::span<const UncertaintySample> samples,
                                 const ControlSchedule& initial, const OpenTarget& target,
                                 const OptimizationConfig& config,
                                 const IterationObserver& observer) {
  const Evaluator evaluate = make_open_evaluator(model, samples, target, config);
  return ascend(evaluate, initial, model.hamiltonian(), config, observer);
}

CMatrix choi_matrix(const CMatrix& superop) {
  const auto d = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(superop.rows()))));
  if (d * d != superop.rows() || !is_square(superop)) {
    throw DimensionError("choi_matrix: superoperator must be d^2 x d^2");
  }
  CMatrix choi = CMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      CMatrix eij = CMatrix::Zero(d, d);
      eij(i, j) = 1.0;
      const CMatrix image = unvectorize(superop * vectorize(eij));
      choi.block(i * d, j * d, d, d) = image;
    }
  }
  return choi;
}

}  // namespace qpulse
