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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpulse/linalg.hpp"

namespace qpulse {

class ModelError : public std::invalid_argument {
 public:
  explicit ModelError(const std::string& what) : std::invalid_argument(what) {}
};

// ---------------------------------------------------------------------------
// Target gates

struct TargetGate {
  std::string name;  // H, S, T_pi8, CNOT or a user label
  CMatrix matrix;
  int qubits = 1;

  Eigen::Index dim() const { return matrix.rows(); }
};

/// Textbook gate matrices for H, S, T_pi8 and CNOT. CNOT uses qubit 1 (the
/// left Kronecker factor) as control, so it swaps |10> and |11>.
TargetGate standard_gate(std::string_view name);

/// Wraps a user matrix; it must be unitary with dimension 2^qubits.
TargetGate custom_gate(std::string name, CMatrix matrix);

// ---------------------------------------------------------------------------
// Operators

namespace pauli {
CMatrix I();
CMatrix X();
CMatrix Y();
CMatrix Z();
/// |0><1|, lowering |1> to |0> with |0> = (1, 0)^T.
CMatrix sigma_minus();
CMatrix sigma_plus();

/// Tensor product of single-qubit factors, leftmost character is qubit 1.
/// Accepts I, X, Y, Z, '-' (sigma_minus) and '+' (sigma_plus).
CMatrix from_string(std::string_view word);
}  // namespace pauli

// ---------------------------------------------------------------------------
// Uncertainty

using ChannelId = std::string;

/// One concrete draw of the multiplicative uncertainty parameters. Channels
/// absent from the map read as 1 (nominal).
class UncertaintySample {
 public:
  UncertaintySample() = default;
  explicit UncertaintySample(std::map<ChannelId, double> eps) : eps_(std::move(eps)) {}

  double epsilon(const std::optional<ChannelId>& channel) const;
  void set(const ChannelId& id, double value) { eps_[id] = value; }
  const std::map<ChannelId, double>& values() const { return eps_; }

  static UncertaintySample nominal() { return {}; }

 private:
  std::map<ChannelId, double> eps_;
};

enum class Distribution { Uniform, Gaussian };

struct UncertaintyChannel {
  ChannelId id;
  double bound = 0.0;  // E in [0, 1); epsilon ranges over [1 - E, 1 + E]
  int grid_count = 1;  // N_k training points
  Distribution distribution = Distribution::Uniform;
};

struct UncertaintyModel {
  std::vector<UncertaintyChannel> channels;

  const UncertaintyChannel* find(const ChannelId& id) const;
  /// Throws ModelError when a bound lies outside [0, 1), a grid count is
  /// below 1 or a channel id repeats.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Hamiltonians

struct Bounds {
  double lo = -1.0;
  double hi = 1.0;

  double clamp(double u) const { return u < lo ? lo : (u > hi ? hi : u); }
};

struct DriftTerm {
  CMatrix op;
  double coefficient = 1.0;
  std::optional<ChannelId> channel;
};

struct ControlTerm {
  std::string name;
  CMatrix op;
  Bounds bounds;
  std::optional<ChannelId> channel;
};

enum class UnitSystem { Atomic, GHzNs };

/// H(u) = sum_k eps_k c_k D_k + sum_m eps_m u_m H_m with every operator
/// Hermitian and of a common dimension.
class HamiltonianModel {
 public:
  HamiltonianModel(std::vector<DriftTerm> drift, std::vector<ControlTerm> controls,
                   UnitSystem units = UnitSystem::Atomic);

  Eigen::Index dim() const { return dim_; }
  std::size_t control_count() const { return controls_.size(); }
  const std::vector<DriftTerm>& drift() const { return drift_; }
  const std::vector<ControlTerm>& controls() const { return controls_; }
  UnitSystem units() const { return units_; }

  /// Every channel id referenced by a drift or control term.
  std::vector<ChannelId> channels() const;

 private:
  std::vector<DriftTerm> drift_;
  std::vector<ControlTerm> controls_;
  UnitSystem units_;
  Eigen::Index dim_ = 0;
};

CMatrix hamiltonian_at(const HamiltonianModel& model, const UncertaintySample& sample,
                       std::span<const double> amplitudes);

// ---------------------------------------------------------------------------
// Dissipative dynamics

struct CollapseTerm {
  CMatrix op;
  double rate = 0.0;  // inverse model time units
  std::optional<ChannelId> channel;
};

class LindbladModel {
 public:
  LindbladModel(HamiltonianModel hamiltonian, std::vector<CollapseTerm> collapse);

  const HamiltonianModel& hamiltonian() const { return hamiltonian_; }
  const std::vector<CollapseTerm>& collapse() const { return collapse_; }
  Eigen::Index dim() const { return hamiltonian_.dim(); }
  std::vector<ChannelId> channels() const;

 private:
  HamiltonianModel hamiltonian_;
  std::vector<CollapseTerm> collapse_;
};

/// Column-stacking vectorization: vec(rho)[i + j*d] = rho(i, j), so that
/// vec(A rho B) = (B^T kron A) vec(rho).
CMatrix vectorize(const CMatrix& rho);
CMatrix unvectorize(const CMatrix& v);

/// Superoperator of rho -> U rho U^dagger in the column-stacking convention.
CMatrix conjugation_superoperator(const CMatrix& u);

/// Superoperator of -i[H, .]: -i (I kron H - H^T kron I).
CMatrix commutator_superoperator(const CMatrix& h);

/// L with vec(rho') = L vec(rho):
///   L = -i(I kron H - H^T kron I)
///       + sum_k G_k [conj(c) kron c - 1/2 I kron c^dag c - 1/2 (c^dag c)^T kron I]
/// Rates scale with their channel epsilon; a negative effective rate throws
/// ModelError.
CMatrix liouvillian(const LindbladModel& model, const UncertaintySample& sample,
                    std::span<const double> amplitudes);

}  // namespace qpulse
