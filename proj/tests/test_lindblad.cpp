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

#include <doctest.h>

#include <cmath>
#include <random>

#include "qpulse/experiment.hpp"
#include "qpulse/grape.hpp"
#include "qpulse/lindblad.hpp"
#include "qpulse/slc.hpp"
#include "test_support.hpp"

using namespace qpulse;
using qpulse::testing::random_complex;
using qpulse::testing::random_hermitian;

namespace {
const Complex kI(0.0, 1.0);

HamiltonianModel one_qubit() {
  return HamiltonianModel({DriftTerm{pauli::Z(), 1.0, {}}},
                          {ControlTerm{"x", pauli::X(), {-5, 5}, {}}, ControlTerm{"z", pauli::Z(), {-5, 5}, {}}});
}

ControlSchedule random_schedule(std::mt19937_64& rng, Eigen::Index controls, Eigen::Index n, double t, double amp) {
  std::uniform_real_distribution<double> u(-amp, amp);
  RealTable v(controls, n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v.data()[i] = u(rng);
  return ControlSchedule(t, v);
}

double cosine(const RealTable& a, const RealTable& b) {
  return (a.cwiseProduct(b)).sum() / (a.norm() * b.norm());
}

RealTable fd_open(const LindbladModel& m, const UncertaintySample& s, const ControlSchedule& sch,
                  const OpenTarget& target, double h = 1e-6) {
  RealTable g(sch.controls(), sch.intervals());
  for (Eigen::Index c = 0; c < sch.controls(); ++c) {
    for (Eigen::Index j = 0; j < sch.intervals(); ++j) {
      ControlSchedule plus = sch, minus = sch;
      plus.values()(c, j) += h;
      minus.values()(c, j) -= h;
      g(c, j) = (evaluate_open(m, s, plus, target, GradientRule::Simpson, false).phi() -
                 evaluate_open(m, s, minus, target, GradientRule::Simpson, false).phi()) /
                (2.0 * h);
    }
  }
  return g;
}

// A random Lindblad model on d levels with two controls and two collapse channels.
LindbladModel random_lindblad(std::mt19937_64& rng, Eigen::Index d) {
  std::uniform_real_distribution<double> rate(0.0, 0.5);
  return LindbladModel(
      HamiltonianModel({DriftTerm{random_hermitian(d, rng), 1.0, {}}},
                       {ControlTerm{"a", random_hermitian(d, rng), {-5, 5}, {}},
                        ControlTerm{"b", random_hermitian(d, rng), {-5, 5}, {}}}),
      {CollapseTerm{random_complex(d, rng), rate(rng), {}}, CollapseTerm{random_hermitian(d, rng), rate(rng), {}}});
}
}  // namespace

TEST_CASE("without dissipation the channel is unitary conjugation") {
  std::mt19937_64 rng(1);
  const HamiltonianModel ham = one_qubit();
  const LindbladModel m(ham, {CollapseTerm{pauli::sigma_minus(), 0.0, {}}});
  for (int trial = 0; trial < 10; ++trial) {
    const ControlSchedule s = random_schedule(rng, 2, 30, 3.0, 2.0);
    const CMatrix u = propagate(ham, UncertaintySample::nominal(), s).terminal();
    const CMatrix g = propagate_channel(m, UncertaintySample::nominal(), s).terminal();
    CHECK((g - conjugation_superoperator(u)).norm() < 1e-9);
    CHECK((conjugation_superoperator(u) - kron(u.conjugate(), u)).norm() == 0.0);
  }
}

TEST_CASE("dephasing under free precession rotates and shrinks coherences") {
  const double gamma = 0.2, t = 2.5;
  const LindbladModel m(
      HamiltonianModel({DriftTerm{pauli::Z(), 1.0, {}}}, {ControlTerm{"x", pauli::X(), {-1, 1}, {}}}),
      {CollapseTerm{pauli::Z(), gamma, {}}});
  const CMatrix g = propagate_channel(m, UncertaintySample::nominal(), ControlSchedule(t, RealTable::Zero(1, 25))).terminal();
  CMatrix rho(2, 2);
  rho << 0.5, 0.5, 0.5, 0.5;
  const CMatrix out = unvectorize(g * vectorize(rho));
  const Complex expected = 0.5 * std::exp(Complex(-2.0 * gamma * t, -2.0 * t));
  CHECK(std::abs(out(0, 1) - expected) < 1e-12);
  CHECK(std::abs(out(1, 0) - std::conj(expected)) < 1e-12);
  CHECK(std::abs(out(0, 0) - 0.5) < 1e-12);
}

TEST_CASE("open fidelity normalization") {
  const OpenTarget h = make_open_target(standard_gate("H"));
  CHECK(open_fidelity(h, h.lifted) == doctest::Approx(1.0).epsilon(1e-14));
  const OpenTarget literal = make_open_target(standard_gate("H"), OpenNormalization::Literal);
  CHECK(open_fidelity(literal, literal.lifted) == doctest::Approx(2.0).epsilon(1e-14));

  // Complete depolarization rho -> tr(rho) I / 2 against the identity target.
  const OpenTarget id = make_open_target(custom_gate("I", identity(2)));
  const CMatrix depolarize = vectorize(0.5 * identity(2)) * vectorize(identity(2)).adjoint();
  CHECK(open_fidelity(id, depolarize) == doctest::Approx(0.25).epsilon(1e-14));

  std::mt19937_64 rng(2);
  const OpenTarget cnot = make_open_target(standard_gate("CNOT"));
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix u = qpulse::testing::random_unitary(4, rng);
    const double fu = fidelity(standard_gate("CNOT"), u);
    CHECK(open_fidelity(cnot, conjugation_superoperator(u)) == doctest::Approx(fu * fu).epsilon(1e-12));
  }
}

TEST_CASE("channel steps preserve trace, Hermiticity and complete positivity") {
  std::mt19937_64 rng(3);
  for (int config = 0; config < 20; ++config) {
    const Eigen::Index d = config % 2 ? 4 : 2;
    const LindbladModel m = random_lindblad(rng, d);
    const ChannelChain chain = propagate_channel(m, UncertaintySample::nominal(), random_schedule(rng, 2, 8, 2.0, 3.0));
    const CMatrix trace_row = vectorize(identity(d)).adjoint();
    for (const CMatrix& g : chain.steps) {
      CHECK((trace_row * g - trace_row).norm() < 1e-9);
      const CMatrix choi = choi_matrix(g);
      CHECK(is_hermitian(choi, 1e-9));  // Hermiticity preservation
      Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (choi + choi.adjoint()));
      CHECK(es.eigenvalues().minCoeff() >= -1e-8);
    }
    const CMatrix rho = qpulse::testing::random_density(d, rng);
    const CMatrix out = unvectorize(chain.terminal() * vectorize(rho));
    CHECK(std::abs(out.trace() - Complex(1.0)) < 1e-9);
    CHECK(is_hermitian(out, 1e-9));
  }
}

TEST_CASE("choi matrix of the identity channel is the unnormalized Bell projector") {
  const CMatrix choi = choi_matrix(identity(4));
  CMatrix bell = CMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 1.0;
  CHECK((choi - bell).norm() == 0.0);
  CHECK_THROWS_AS(choi_matrix(identity(3)), DimensionError);
}

TEST_CASE("without dissipation the open gradient is a positive multiple of the unitary gradient") {
  std::mt19937_64 rng(4);
  const HamiltonianModel ham = one_qubit();
  const LindbladModel m(ham, {CollapseTerm{pauli::Z(), 0.0, {}}});
  for (int trial = 0; trial < 10; ++trial) {
    const ControlSchedule s = random_schedule(rng, 2, 40, 4.0, 1.0);
    const TargetGate gate = standard_gate(trial % 2 ? "S" : "H");
    for (GradientRule rule : {GradientRule::Midpoint, GradientRule::Endpoint, GradientRule::Simpson}) {
      const RealTable go = open_gradient(m, UncertaintySample::nominal(), s, make_open_target(gate), rule);
      const RealTable gu = gradient(ham, UncertaintySample::nominal(), s, gate, rule);
      CHECK(cosine(go, gu) >= 0.999);
      // Phi_open = Phi_u^2, so the chain rule fixes the factor to 2 Phi_u.
      const double phi_u = evaluate_unitary(ham, UncertaintySample::nominal(), s, gate, rule, false).phi();
      CHECK((go - 2.0 * phi_u * gu).norm() <= 1e-9 * go.norm());
    }
  }
}

TEST_CASE("open gradient matches finite differences on the flux-qubit preset") {
  const ExperimentConfig cfg = preset_config("flux_qubit_open");
  const LindbladModel m = cfg.lindblad();
  const ControlSchedule s0 = cfg.initial_schedule();
  REQUIRE(s0.dt() == doctest::Approx(0.125));
  std::mt19937_64 rng(5);
  const ControlSchedule s1 = random_schedule(rng, 2, 40, 5.0, 2.0);
  UncertaintySample eps;
  eps.set("gamma_1", 1.2);
  eps.set("gamma_phi", 0.8);
  for (const char* gate : {"H", "S", "T_pi8"}) {
    const OpenTarget target = make_open_target(standard_gate(gate));
    for (const ControlSchedule* s : {&s0, &s1}) {
      for (const UncertaintySample& sample : {UncertaintySample::nominal(), eps}) {
        const RealTable ref = fd_open(m, sample, *s, target);
        const double err = (open_gradient(m, sample, *s, target) - ref).norm() / ref.norm();
        INFO(gate << " relative error " << err);
        CHECK(err <= 1e-3);
      }
    }
  }
}

TEST_CASE("open gradient vanishes at an exactly realized target") {
  std::mt19937_64 rng(6);
  const HamiltonianModel ham = one_qubit();
  const LindbladModel m(ham, {CollapseTerm{pauli::Z(), 0.0, {}}});
  const ControlSchedule s = random_schedule(rng, 2, 20, 2.0, 1.0);
  const TargetGate reached = custom_gate("reached", propagate(ham, UncertaintySample::nominal(), s).terminal());
  const RealTable g = open_gradient(m, UncertaintySample::nominal(), s, make_open_target(reached));
  CHECK(g.norm() < 1e-10);
}

TEST_CASE("open ascent without dissipation retraces unitary Phi ascent") {
  const HamiltonianModel ham = one_qubit();
  const LindbladModel m(ham, {CollapseTerm{pauli::Z(), 0.0, {}}});
  const InitSpec spec = init::SinScaled{1.0};
  const ControlSchedule s0 = init_schedule(std::span(&spec, 1), ham, 4.0, 40);
  for (const char* name : {"H", "S"}) {
    const TargetGate gate = standard_gate(name);
    OptimizationConfig unitary;
    unitary.step_size = 0.1;
    unitary.max_iterations = 30;
    unitary.objective = Objective::Phi;
    OptimizationConfig open = unitary;
    // F_open = Phi_u / d^2, so its gradient is the Phi gradient divided by d^2.
    open.objective = Objective::Fidelity;
    open.step_size = unitary.step_size * 4.0;
    const UncertaintySample nominal[1] = {UncertaintySample::nominal()};
    const OptimizationReport ru = optimize(ham, nominal[0], s0, gate, unitary);
    const OptimizationReport ro = open_optimize(m, nominal, s0, make_open_target(gate), open);
    REQUIRE(ru.fidelity_trace.size() == ro.fidelity_trace.size());
    for (std::size_t k = 0; k < ru.fidelity_trace.size(); ++k) {
      CHECK(std::abs(ro.fidelity_trace[k] - ru.fidelity_trace[k] * ru.fidelity_trace[k]) <= 1e-6);
    }
    CHECK((ro.schedule.values() - ru.schedule.values()).norm() <= 1e-8);
  }
}

TEST_CASE("zero-iteration open run reports the initial fidelity") {
  const ExperimentConfig cfg = preset_config("flux_qubit_open");
  const LindbladModel m = cfg.lindblad();
  const ControlSchedule s0 = cfg.initial_schedule();
  const OpenTarget target = make_open_target(cfg.target_gate());
  OptimizationConfig opt = cfg.optimizer;
  opt.max_iterations = 0;
  const UncertaintySample nominal[1] = {UncertaintySample::nominal()};
  const OptimizationReport r = open_optimize(m, nominal, s0, target, opt);
  CHECK(r.iterations == 0);
  REQUIRE(r.fidelity_trace.size() == 1);
  CHECK(r.fidelity_trace[0] == evaluate_open(m, nominal[0], s0, target, opt.rule, false).fidelity);
  CHECK(r.schedule == s0);
}

TEST_CASE("dissipation bounds the achievable open fidelity below one") {
  const ExperimentConfig cfg = preset_config("flux_qubit_open");
  const LindbladModel m = cfg.lindblad();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const double f = evaluate_open(m, UncertaintySample::nominal(), random_schedule(rng, 2, 40, 5.0, 5.0),
                                   make_open_target(cfg.target_gate()), GradientRule::Simpson, false)
                         .fidelity;
    CHECK(f < 1.0);
    CHECK(f >= 0.0);
  }
}
