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

#include "qpulse/model.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace qpulse {

TargetGate standard_gate(std::string_view name) {
  const Complex i(0.0, 1.0);
  if (name == "H") {
    CMatrix m(2, 2);
    m << 1.0, 1.0, 1.0, -1.0;
    return {"H", m / std::numbers::sqrt2, 1};
  }
  if (name == "S") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = i;
    return {"S", m, 1};
  }
  if (name == "T_pi8") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
    return {"T_pi8", m, 1};
  }
  if (name == "CNOT") {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return {"CNOT", m, 2};
  }
  throw ModelError("unknown gate '" + std::string(name) + "' (expected H, S, T_pi8 or CNOT)");
}

TargetGate custom_gate(std::string name, CMatrix matrix) {
  const Eigen::Index d = matrix.rows();
  if (!is_square(matrix) || (d != 2 && d != 4)) {
    throw DimensionError("custom gate must be 2x2 or 4x4");
  }
  if (!is_unitary(matrix, 1e-12)) {
    throw ModelError("custom gate '" + name + "' is not unitary");
  }
  return {std::move(name), std::move(matrix), d == 2 ? 1 : 2};
}

namespace pauli {

CMatrix I() { return identity(2); }

CMatrix X() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix Y() {
  CMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

CMatrix Z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

CMatrix sigma_minus() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

CMatrix sigma_plus() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

CMatrix from_string(std::string_view word) {
  if (word.empty()) {
    throw ModelError("empty Pauli string");
  }
  CMatrix out = identity(1);
  for (char c : word) {
    CMatrix factor;
    switch (c) {
      case 'I': factor = I(); break;
      case 'X': factor = X(); break;
      case 'Y': factor = Y(); break;
      case 'Z': factor = Z(); break;
      case '-': factor = sigma_minus(); break;
      case '+': factor = sigma_plus(); break;
      default:
        throw ModelError("invalid Pauli character '" + std::string(1, c) + "' in '" +
                         std::string(word) + "'");
    }
    out = kron(out, factor);
  }
  return out;
}

}  // namespace pauli

double UncertaintySample::epsilon(const std::optional<ChannelId>& channel) const {
  if (!channel) return 1.0;
  const auto it = eps_.find(*channel);
  return it == eps_.end() ? 1.0 : it->second;
}

const UncertaintyChannel* UncertaintyModel::find(const ChannelId& id) const {
  for (const auto& c : channels) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void UncertaintyModel::validate() const {
  std::set<ChannelId> seen;
  for (const auto& c : channels) {
    if (!seen.insert(c.id).second) {
      throw ModelError("duplicate uncertainty channel '" + c.id + "'");
    }
    if (!(c.bound >= 0.0 && c.bound < 1.0)) {
      throw ModelError("uncertainty channel '" + c.id + "': bound must lie in [0, 1)");
    }
    if (c.grid_count < 1) {
      throw ModelError("uncertainty channel '" + c.id + "': grid count must be >= 1");
    }
  }
}

HamiltonianModel::HamiltonianModel(std::vector<DriftTerm> drift, std::vector<ControlTerm> controls,
                                   UnitSystem units)
    : drift_(std::move(drift)), controls_(std::move(controls)), units_(units) {
  auto check = [this](const CMatrix& op, const std::string& what) {
    if (!is_square(op) || op.rows() == 0) {
      throw DimensionError(what + " is not a square matrix");
    }
    if (dim_ == 0) dim_ = op.rows();
    if (op.rows() != dim_) {
      throw DimensionError(what + " has dimension " + std::to_string(op.rows()) + ", expected " +
                           std::to_string(dim_));
    }
    if (!is_hermitian(op, 1e-12)) {
      throw ModelError(what + " is not Hermitian");
    }
  };
  for (std::size_t k = 0; k < drift_.size(); ++k) {
    check(drift_[k].op, "drift term " + std::to_string(k));
  }
  for (std::size_t m = 0; m < controls_.size(); ++m) {
    const auto& c = controls_[m];
    check(c.op, "control '" + c.name + "'");
    if (!(c.bounds.lo < c.bounds.hi)) {
      throw ModelError("control '" + c.name + "': bounds require lo < hi");
    }
  }
  if (dim_ == 0) {
    throw ModelError("Hamiltonian model has no terms");
  }
}

std::vector<ChannelId> HamiltonianModel::channels() const {
  std::set<ChannelId> ids;
  for (const auto& d : drift_) {
    if (d.channel) ids.insert(*d.channel);
  }
  for (const auto& c : controls_) {
    if (c.channel) ids.insert(*c.channel);
  }
  return {ids.begin(), ids.end()};
}

CMatrix hamiltonian_at(const HamiltonianModel& model, const UncertaintySample& sample,
                       std::span<const double> amplitudes) {
  if (amplitudes.size() != model.control_count()) {
    throw DimensionError("hamiltonian_at: got " + std::to_string(amplitudes.size()) +
                         " amplitudes for " + std::to_string(model.control_count()) +
                         " controls");
  }
  CMatrix h = CMatrix::Zero(model.dim(), model.dim());
  for (const auto& d : model.drift()) {
    h += (sample.epsilon(d.channel) * d.coefficient) * d.op;
  }
  for (std::size_t m = 0; m < amplitudes.size(); ++m) {
    const auto& c = model.controls()[m];
    h += (sample.epsilon(c.channel) * amplitudes[m]) * c.op;
  }
  return h;
}

LindbladModel::LindbladModel(HamiltonianModel hamiltonian, std::vector<CollapseTerm> collapse)
    : hamiltonian_(std::move(hamiltonian)), collapse_(std::move(collapse)) {
  for (std::size_t k = 0; k < collapse_.size(); ++k) {
    const auto& c = collapse_[k];
    if (c.op.rows() != dim() || !is_square(c.op)) {
      throw DimensionError("collapse operator " + std::to_string(k) +
                           " does not match the Hamiltonian dimension");
    }
    if (!(c.rate >= 0.0) || !std::isfinite(c.rate)) {
      throw ModelError("collapse operator " + std::to_string(k) + ": rate must be >= 0");
    }
  }
}

std::vector<ChannelId> LindbladModel::channels() const {
  auto ids = hamiltonian_.channels();
  std::set<ChannelId> all(ids.begin(), ids.end());
  for (const auto& c : collapse_) {
    if (c.channel) all.insert(*c.channel);
  }
  return {all.begin(), all.end()};
}

CMatrix vectorize(const CMatrix& rho) {
  const Eigen::Index d = rho.rows();
  CMatrix v(d * d, 1);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      v(i + j * d, 0) = rho(i, j);
    }
  }
  return v;
}

CMatrix unvectorize(const CMatrix& v) {
  const auto d = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size()) {
    throw DimensionError("unvectorize: length is not a perfect square");
  }
  CMatrix rho(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      rho(i, j) = v(i + j * d);
    }
  }
  return rho;
}

CMatrix conjugation_superoperator(const CMatrix& u) { return kron(u.conjugate(), u); }

CMatrix commutator_superoperator(const CMatrix& h) {
  const CMatrix id = identity(h.rows());
  return Complex(0.0, -1.0) * (kron(id, h) - kron(h.transpose(), id));
}

CMatrix liouvillian(const LindbladModel& model, const UncertaintySample& sample,
                    std::span<const double> amplitudes) {
  const CMatrix h = hamiltonian_at(model.hamiltonian(), sample, amplitudes);
  const CMatrix id = identity(model.dim());
  CMatrix l = commutator_superoperator(h);
  for (const auto& c : model.collapse()) {
    const double rate = c.rate * sample.epsilon(c.channel);
    if (rate < 0.0) {
      throw ModelError("negative effective decoherence rate after uncertainty scaling");
    }
    if (rate == 0.0) continue;
    const CMatrix cdc = c.op.adjoint() * c.op;
    l += rate * (kron(c.op.conjugate(), c.op) - 0.5 * kron(id, cdc) - 0.5 * kron(cdc.transpose(), id));
  }
  return l;
}

}  // namespace qpulse
