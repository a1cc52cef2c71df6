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

#include <array>

#include "qpulse/experiment.hpp"

namespace qpulse {
namespace {

struct Preset {
  std::string_view name;
  std::string_view description;
  std::string_view text;
};

// One-qubit system shared by the first five presets: H0 = w0 Z (w0 = 1) and a
// single control wx X in [-5, 5], atomic units.
constexpr std::string_view kOneQubitOptimal = R"({
  "name": "one_qubit_H_optimal",
  "description": "Unitary GRAPE for the H gate: H0 = Z, control wx X in [-5, 5], T = 8, 200 intervals, step 0.5, initial field sin t",
  "system": {
    "qubits": 1,
    "units": "atomic",
    "drift": [{"operator": {"Z": 1}, "coefficient": 1.0}],
    "controls": [{"name": "omega_x", "operator": {"X": 1}, "bounds": [-5, 5]}]
  },
  "target": "H",
  "time": {"total": 8, "intervals": 200},
  "initial": {"kind": "sin", "amplitude": 1.0},
  "optimizer": {"step_size": 0.5, "iterations": 200, "target_infidelity": 1e-12, "seed": 1,
                "objective": "phi", "gradient_rule": "simpson"}
}
)";

constexpr std::string_view kTerminalTime = R"({
  "name": "one_qubit_H_terminal_time",
  "description": "Best H-gate infidelity versus terminal time T in {1, 2, 4, 8} with |wx| <= 5, 200 intervals",
  "system": {
    "qubits": 1,
    "units": "atomic",
    "drift": [{"operator": {"Z": 1}, "coefficient": 1.0}],
    "controls": [{"name": "omega_x", "operator": {"X": 1}, "bounds": [-5, 5]}]
  },
  "target": "H",
  "time": {"total": 8, "intervals": 200},
  "initial": {"kind": "sin", "amplitude": 1.0},
  "optimizer": {"step_size": 0.5, "iterations": 1000, "target_infidelity": 1e-12, "seed": 1,
                "objective": "phi", "gradient_rule": "simpson"},
  "sweep": {"param": "terminal-time", "values": [1, 2, 4, 8]}
}
)";

constexpr std::string_view kOneQubitRobust = R"({
  "name": "one_qubit_S_robust",
  "description": "Robust S gate: eps0 on the drift, eps1 on the control, E = 0.2, 5 x 5 training grid, 40 pulses, 2000 uniform test samples",
  "system": {
    "qubits": 1,
    "units": "atomic",
    "drift": [{"operator": {"Z": 1}, "coefficient": 1.0, "channel": "eps0"}],
    "controls": [{"name": "omega_x", "operator": {"X": 1}, "bounds": [-5, 5], "channel": "eps1"}]
  },
  "target": "S",
  "time": {"total": 8, "intervals": 40},
  "initial": {"kind": "sin", "amplitude": 1.0},
  "uncertainty": {
    "channels": [
      {"id": "eps0", "bound": 0.2, "grid": 5, "distribution": "uniform"},
      {"id": "eps1", "bound": 0.2, "grid": 5, "distribution": "uniform"}
    ],
    "test_samples": 2000
  },
  "optimizer": {"step_size": 1.0, "iterations": 20000, "target_infidelity": 0, "seed": 1,
                "objective": "fidelity", "gradient_rule": "simpson"}
}
)";

constexpr std::string_view kPulseCount = R"({
  "name": "one_qubit_S_pulse_count",
  "description": "Robust S gate trained at 5, 10, 20, 40 and 80 pulses; mean test fidelity per pulse count",
  "system": {
    "qubits": 1,
    "units": "atomic",
    "drift": [{"operator": {"Z": 1}, "coefficient": 1.0, "channel": "eps0"}],
    "controls": [{"name": "omega_x", "operator": {"X": 1}, "bounds": [-5, 5], "channel": "eps1"}]
  },
  "target": "S",
  "time": {"total": 8, "intervals": 40},
  "initial": {"kind": "sin", "amplitude": 1.0},
  "uncertainty": {
    "channels": [
      {"id": "eps0", "bound": 0.2, "grid": 5, "distribution": "uniform"},
      {"id": "eps1", "bound": 0.2, "grid": 5, "distribution": "uniform"}
    ],
    "test_samples": 2000
  },
  "optimizer": {"step_size": 1.0, "iterations": 20000, "target_infidelity": 0, "seed": 1,
                "objective": "fidelity", "gradient_rule": "simpson"},
  "sweep": {"param": "pulse-count", "values": [5, 10, 20, 40, 80]}
}
)";

constexpr std::string_view kBound = R"({
  "name": "one_qubit_S_bound",
  "description": "Robust S gate trained and tested at uncertainty bounds E from 0.05 to 0.3 on both channels",
  "system": {
    "qubits": 1,
    "units": "atomic",
    "drift": [{"operator": {"Z": 1}, "coefficient": 1.0, "channel": "eps0"}],
    "controls": [{"name": "omega_x", "operator": {"X": 1}, "bounds": [-5, 5], "channel": "eps1"}]
  },
  "target": "S",
  "time": {"total": 8, "intervals": 40},
  "initial": {"kind": "sin", "amplitude": 1.0},
  "uncertainty": {
    "channels": [
      {"id": "eps0", "bound": 0.2, "grid": 5, "distribution": "uniform"},
      {"id": "eps1", "bound": 0.2, "grid": 5, "distribution": "uniform"}
    ],
    "test_samples": 2000
  },
  "optimizer": {"step_size": 1.0, "iterations": 20000, "target_infidelity": 0, "seed": 1,
                "objective": "fidelity", "gradient_rule": "simpson"},
  "sweep": {"param": "bound", "values": [0.05, 0.1, 0.15, 0.2, 0.25, 0.3]}
}
)";

// Flux qubit: H = ux X + uz Z, relaxation D[sigma_-] at 1e5 /s and dephasing
// D[Z] at 1e6 /s, both rates uncertain by +-20%.
constexpr std::string_view kFluxQubit = R"({
  "name": "flux_qubit_open",
  "description": "Open-system GRAPE on a dissipative flux qubit: controls ux X + uz Z, Gamma1 = 1e5/s, Gamma_phi = 1e6/s with +-20% rate fluctuations, T = 5 ns, 40 pulses",
  "system": {
    "qubits": 1,
    "units": "GHz-ns",
    "dynamics": "lindblad",
    "drift": [],
    "controls": [
      {"name": "u_x", "operator": {"X": 1}, "bounds": [-5, 5]},
      {"name": "u_z", "operator": {"Z": 1}, "bounds": [-5, 5]}
    ],
    "dissipation": [
      {"operator": "-", "rate": 1e5, "rate_units": "per_second", "channel": "gamma_1"},
      {"operator": "Z", "rate": 1e6, "rate_units": "per_second", "channel": "gamma_phi"}
    ]
  },
  "target": "H",
  "time": {"total": 5, "intervals": 40},
  "initial": {"kind": "sin", "amplitude": 1.0},
  "uncertainty": {
    "channels": [
      {"id": "gamma_1", "bound": 0.2, "grid": 3, "distribution": "uniform"},
      {"id": "gamma_phi", "bound": 0.2, "grid": 3, "distribution": "uniform"}
    ],
    "test_samples": 2000
  },
  "optimizer": {"step_size": 1.0, "iterations": 80, "target_infidelity": 0, "seed": 1,
                "objective": "fidelity", "gradient_rule": "simpson"},
  "open_normalization": "lifted"
}
)";

// Two coupled phase qubits:
//   H = eps1 w1/2 ZI + eps2 w2/2 IZ + w3/2 XI + w4/2 IX + eps3 Wc/2 (XX + ZZ/30)
// with w3 = w4 = 2 GHz, w1, w2 in [-5, 5] GHz and Wc in [-0.5, 0.5] GHz.
constexpr std::string_view kCnotOptimal = R"({
  "name": "cnot_optimal",
  "description": "CNOT on two coupled phase qubits without fluctuations: T = 20 ns, 40 intervals, initial fields sin t, sin t, 0.05 sin t",
  "system": {
    "qubits": 2,
    "units": "GHz-ns",
    "drift": [
      {"operator": {"XI": 0.5}, "coefficient": 2.0},
      {"operator": {"IX": 0.5}, "coefficient": 2.0}
    ],
    "controls": [
      {"name": "omega_1", "operator": {"ZI": 0.5}, "bounds": [-5, 5]},
      {"name": "omega_2", "operator": {"IZ": 0.5}, "bounds": [-5, 5]},
      {"name": "Omega_c", "operator": {"XX": 0.5, "ZZ": "1/60"}, "bounds": [-0.5, 0.5]}
    ]
  },
  "target": "CNOT",
  "time": {"total": 20, "intervals": 40},
  "initial": [
    {"kind": "sin", "amplitude": 1.0},
    {"kind": "sin", "amplitude": 1.0},
    {"kind": "sin", "amplitude": 0.05}
  ],
  "optimizer": {"step_size": 0.05, "iterations": 1000, "target_infidelity": 1e-12, "seed": 1,
                "objective": "phi", "gradient_rule": "simpson"}
}
)";

constexpr std::string_view kCnotRobust = R"({
  "name": "cnot_robust",
  "description": "Robust CNOT with +-20% fluctuations on omega_1, omega_2 and Omega_c: 3 x 3 x 3 training grid, 2000 uniform test samples",
  "system": {
    "qubits": 2,
    "units": "GHz-ns",
    "drift": [
      {"operator": {"XI": 0.5}, "coefficient": 2.0},
      {"operator": {"IX": 0.5}, "coefficient": 2.0}
    ],
    "controls": [
      {"name": "omega_1", "operator": {"ZI": 0.5}, "bounds": [-5, 5], "channel": "eps1"},
      {"name": "omega_2", "operator": {"IZ": 0.5}, "bounds": [-5, 5], "channel": "eps2"},
      {"name": "Omega_c", "operator": {"XX": 0.5, "ZZ": "1/60"}, "bounds": [-0.5, 0.5], "channel": "eps3"}
    ]
  },
  "target": "CNOT",
  "time": {"total": 20, "intervals": 40},
  "initial": [
    {"kind": "sin", "amplitude": 1.0},
    {"kind": "sin", "amplitude": 1.0},
    {"kind": "sin", "amplitude": 0.05}
  ],
  "uncertainty": {
    "channels": [
      {"id": "eps1", "bound": 0.2, "grid": 3, "distribution": "uniform"},
      {"id": "eps2", "bound": 0.2, "grid": 3, "distribution": "uniform"},
      {"id": "eps3", "bound": 0.2, "grid": 3, "distribution": "uniform"}
    ],
    "test_samples": 2000
  },
  "optimizer": {"step_size": 1.0, "iterations": 5000, "target_infidelity": 0, "seed": 1,
                "objective": "fidelity", "gradient_rule": "simpson"}
}
)";

constexpr std::array<Preset, 8> kPresets = {{
    {"one_qubit_H_optimal", "optimal H (or S, T_pi8) gate, w0 = 1, |wx| <= 5, T = 8, 200 intervals", kOneQubitOptimal},
    {"one_qubit_H_terminal_time", "H-gate infidelity versus terminal time T in {1, 2, 4, 8}", kTerminalTime},
    {"one_qubit_S_robust", "robust S gate, E = 0.2 on w0 and wx, 5 x 5 grid, 40 pulses, 2000 test samples", kOneQubitRobust},
    {"one_qubit_S_pulse_count", "robust S gate versus number of pulses {5, 10, 20, 40, 80}", kPulseCount},
    {"one_qubit_S_bound", "robust S gate versus uncertainty bound E in [0.05, 0.3]", kBound},
    {"flux_qubit_open", "dissipative flux qubit, uncertain relaxation/dephasing rates, T = 5 ns, 40 pulses", kFluxQubit},
    {"cnot_optimal", "CNOT on two coupled phase qubits, T = 20 ns, 40 intervals", kCnotOptimal},
    {"cnot_robust", "robust CNOT, E = 0.2 on omega_1, omega_2, Omega_c", kCnotRobust},
}};

}  // namespace

std::vector<PresetInfo> list_presets() {
  std::vector<PresetInfo> out;
  out.reserve(kPresets.size());
  for (const auto& p : kPresets) out.push_back({std::string(p.name), std::string(p.description)});
  return out;
}

std::string preset_text(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return std::string(p.text);
  }
  throw ConfigError({"unknown preset '" + std::string(name) + "' (see list-presets)"});
}

ExperimentConfig preset_config(std::string_view name) { return parse_config(preset_text(name)); }

}  // namespace qpulse
