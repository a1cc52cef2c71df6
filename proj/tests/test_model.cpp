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
#include <numbers>
#include <random>
#include <vector>

#include "qpulse/model.hpp"
#include "test_support.hpp"

using namespace qpulse;
using qpulse::testing::random_density;
using qpulse::testing::random_hermitian;

namespace {
const Complex kI(0.0, 1.0);

HamiltonianModel one_qubit() {
  return HamiltonianModel({DriftTerm{pauli::Z(), 1.0, "eps0"}},
                          {ControlTerm{"u", pauli::X(), Bounds{-5.0, 5.0}, "eps1"}});
}
}  // namespace

TEST_CASE("standard gates") {
  const CMatrix h = standard_gate("H").matrix;
  const CMatrix s = standard_gate("S").matrix;
  const CMatrix t = standard_gate("T_pi8").matrix;
  CHECK((h * h - identity(2)).norm() < 1e-15);
  CHECK(std::abs(h(0, 0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(h(1, 1) + 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(s(0, 0) == Complex(1.0, 0.0));
  CHECK(std::abs(s(1, 1) - kI) < 1e-15);
  CHECK(std::abs(s(0, 1)) == 0.0);
  CHECK((t * t - s).norm() < 1e-15);
  CHECK((t * t * t * t - s * s).norm() < 1e-15);

  const TargetGate cnot = standard_gate("CNOT");
  CHECK(cnot.qubits == 2);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = expected(1, 1) = expected(2, 3) = expected(3, 2) = 1.0;
  CHECK((cnot.matrix - expected).norm() == 0.0);
  for (const char* name : {"H", "S", "T_pi8", "CNOT"}) CHECK(is_unitary(standard_gate(name).matrix, 1e-14));
  CHECK_THROWS_AS(standard_gate("Q"), ModelError);
}

TEST_CASE("custom gates must be unitary with power-of-two dimension") {
  CHECK(custom_gate("X", pauli::X()).qubits == 1);
  CHECK_THROWS(custom_gate("bad", 2.0 * pauli::X()));
  CHECK_THROWS(custom_gate("bad", identity(3)));
}

TEST_CASE("Pauli words put qubit 1 leftmost") {
  CHECK((pauli::from_string("ZI") - kron(pauli::Z(), pauli::I())).norm() == 0.0);
  CHECK((pauli::from_string("IX") - kron(pauli::I(), pauli::X())).norm() == 0.0);
  CHECK((pauli::Y() - kI * pauli::X() * pauli::Z()).norm() < 1e-15);
  CHECK(pauli::sigma_minus()(0, 1) == Complex(1.0, 0.0));
  CHECK(std::abs(pauli::sigma_minus()(1, 0)) == 0.0);
  CHECK((pauli::from_string("-") - pauli::sigma_minus()).norm() == 0.0);
  CHECK_THROWS_AS(pauli::from_string("XQ"), ModelError);
}

TEST_CASE("hamiltonian_at scales drift and control by their channels") {
  const HamiltonianModel m = one_qubit();
  const double u = 2.0;
  UncertaintySample s;
  s.set("eps0", 1.2);
  s.set("eps1", 0.8);
  const CMatrix h = hamiltonian_at(m, s, std::span<const double>(&u, 1));
  CHECK((h - (1.2 * pauli::Z() + 1.6 * pauli::X())).norm() < 1e-15);
  const CMatrix h0 = hamiltonian_at(m, UncertaintySample::nominal(), std::span<const double>(&u, 1));
  CHECK((h0 - (pauli::Z() + 2.0 * pauli::X())).norm() < 1e-15);
  const double two[2] = {1.0, 2.0};
  CHECK_THROWS(hamiltonian_at(m, s, std::span<const double>(two, 2)));
}

TEST_CASE("two-qubit Hamiltonian assembles the coupled expression") {
  const HamiltonianModel m(
      {DriftTerm{pauli::from_string("XI"), 1.0, std::nullopt}, DriftTerm{pauli::from_string("IX"), 1.0, std::nullopt}},
      {ControlTerm{"w1", 0.5 * pauli::from_string("ZI"), {-5, 5}, std::nullopt},
       ControlTerm{"w2", 0.5 * pauli::from_string("IZ"), {-5, 5}, std::nullopt},
       ControlTerm{"wc", 0.5 * pauli::from_string("XX") + (1.0 / 60.0) * pauli::from_string("ZZ"), {-0.5, 0.5},
                   std::nullopt}});
  const double u[3] = {0.3, -0.7, 0.2};
  const CMatrix h = hamiltonian_at(m, UncertaintySample::nominal(), u);
  CMatrix expected = pauli::from_string("XI") + pauli::from_string("IX") + 0.15 * pauli::from_string("ZI") -
                     0.35 * pauli::from_string("IZ") + 0.1 * pauli::from_string("XX") +
                     (0.2 / 60.0) * pauli::from_string("ZZ");
  CHECK((h - expected).norm() < 1e-14);
  CHECK(is_hermitian(h, 1e-14));
}

TEST_CASE("HamiltonianModel validation") {
  CHECK_THROWS_AS(HamiltonianModel({DriftTerm{pauli::Y() * kI, 1.0, {}}}, {}), ModelError);
  CHECK_THROWS_AS(HamiltonianModel({DriftTerm{pauli::Z(), 1.0, {}}},
                                   {ControlTerm{"u", pauli::from_string("XX"), {-1, 1}, {}}}),
                  DimensionError);
  CHECK_THROWS_AS(HamiltonianModel({DriftTerm{pauli::Z(), 1.0, {}}}, {ControlTerm{"u", pauli::X(), {1, -1}, {}}}),
                  ModelError);
  CHECK(one_qubit().channels() == std::vector<ChannelId>{"eps0", "eps1"});
}

TEST_CASE("vectorization stacks columns and maps AXB to (B^T kron A) vec X") {
  CMatrix x(2, 2);
  x << 1.0, 2.0, 3.0, 4.0;
  const CMatrix v = vectorize(x);
  REQUIRE(v.rows() == 4);
  CHECK(v(0, 0) == Complex(1.0));
  CHECK(v(1, 0) == Complex(3.0));
  CHECK(v(2, 0) == Complex(2.0));
  CHECK(v(3, 0) == Complex(4.0));
  CHECK((unvectorize(v) - x).norm() == 0.0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = qpulse::testing::random_complex(2, rng), b = qpulse::testing::random_complex(2, rng),
                  r = qpulse::testing::random_complex(2, rng);
    CHECK((vectorize(a * r * b) - kron(b.transpose(), a) * vectorize(r)).norm() < 1e-12);
  }
}

TEST_CASE("liouvillian without dissipation generates unitary conjugation") {
  std::mt19937_64 rng(6);
  const HamiltonianModel ham = one_qubit();
  const LindbladModel m(ham, {CollapseTerm{pauli::Z(), 0.0, std::nullopt}});
  for (int trial = 0; trial < 10; ++trial) {
    const double u = std::uniform_real_distribution<double>(-5, 5)(rng);
    const CMatrix h = hamiltonian_at(ham, UncertaintySample::nominal(), std::span<const double>(&u, 1));
    const CMatrix l = liouvillian(m, UncertaintySample::nominal(), std::span<const double>(&u, 1));
    const double t = 0.37;
    const CMatrix uu = expm(-kI * t * h);
    CHECK((expm(t * l) - kron(uu.conjugate(), uu)).norm() < 1e-12);
  }
}

TEST_CASE("pure dephasing decays coherences as exp(-2 gamma t)") {
  const double gamma = 0.3;
  const LindbladModel m(HamiltonianModel({DriftTerm{pauli::Z(), 0.0, {}}}, {}),
                        {CollapseTerm{pauli::Z(), gamma, std::nullopt}});
  const CMatrix l = liouvillian(m, UncertaintySample::nominal(), {});
  CMatrix rho(2, 2);
  rho << 0.5, 0.5, 0.5, 0.5;
  for (double t : {0.1, 1.0, 3.0}) {
    const CMatrix out = unvectorize(expm(t * l) * vectorize(rho));
    CHECK(std::abs(out(0, 1) - 0.5 * std::exp(-2.0 * gamma * t)) < 1e-12);
    CHECK(std::abs(out(0, 0) - 0.5) < 1e-12);
  }
}

TEST_CASE("amplitude damping relaxes the excited population") {
  const double gamma = 0.7;
  const LindbladModel m(HamiltonianModel({DriftTerm{pauli::Z(), 0.0, {}}}, {}),
                        {CollapseTerm{pauli::sigma_minus(), gamma, std::nullopt}});
  const CMatrix l = liouvillian(m, UncertaintySample::nominal(), {});
  CMatrix rho = CMatrix::Zero(2, 2);
  rho(1, 1) = 1.0;
  const double t = 0.9;
  const CMatrix out = unvectorize(expm(t * l) * vectorize(rho));
  CHECK(std::abs(out(1, 1) - std::exp(-gamma * t)) < 1e-12);
  CHECK(std::abs(out(0, 0) - (1.0 - std::exp(-gamma * t))) < 1e-12);
}

TEST_CASE("random Lindbladians preserve trace, Hermiticity and positivity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = trial % 2 ? 4 : 2;
    const LindbladModel m(HamiltonianModel({DriftTerm{random_hermitian(d, rng), 1.0, {}}}, {}),
                          {CollapseTerm{qpulse::testing::random_complex(d, rng), 0.2, std::nullopt},
                           CollapseTerm{random_hermitian(d, rng), 0.1, std::nullopt}});
    const CMatrix l = liouvillian(m, UncertaintySample::nominal(), {});
    // The trace functional is vec(I)^dagger; it must annihilate L.
    CHECK((vectorize(identity(d)).adjoint() * l).norm() < 1e-12);
    const CMatrix rho = random_density(d, rng);
    const CMatrix out = unvectorize(expm(1.3 * l) * vectorize(rho));
    CHECK(std::abs(out.trace() - Complex(1.0)) < 1e-12);
    CHECK(is_hermitian(out, 1e-12));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (out + out.adjoint()));
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }
}

TEST_CASE("negative effective rates are rejected") {
  const LindbladModel m(HamiltonianModel({DriftTerm{pauli::Z(), 1.0, {}}}, {}),
                        {CollapseTerm{pauli::Z(), 0.1, "g"}});
  UncertaintySample s;
  s.set("g", -1.0);
  CHECK_THROWS_AS(liouvillian(m, s, {}), ModelError);
}

TEST_CASE("uncertainty samples default to unity") {
  UncertaintySample s;
  CHECK(s.epsilon(std::nullopt) == 1.0);
  CHECK(s.epsilon(ChannelId("x")) == 1.0);
  s.set("x", 1.1);
  CHECK(s.epsilon(ChannelId("x")) == 1.1);
  UncertaintyModel bad{{UncertaintyChannel{"x", 1.5, 3, Distribution::Uniform}}};
  CHECK_THROWS(bad.validate());
  UncertaintyModel dup{{UncertaintyChannel{"x", 0.1, 3}, UncertaintyChannel{"x", 0.1, 3}}};
  CHECK_THROWS(dup.validate());
}
