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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpulse/ascent.hpp"
#include "qpulse/lindblad.hpp"
#include "qpulse/model.hpp"
#include "qpulse/pulse.hpp"
#include "qpulse/slc.hpp"

namespace qpulse {

/// Raised by the config loader; carries every violation found, not just the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

enum class Dynamics { Unitary, Lindblad };
enum class SweepParam { PulseCount, Bound, TerminalTime };

std::string_view to_string(SweepParam param);
std::optional<SweepParam> parse_sweep_param(std::string_view text);

struct SweepSpec {
  SweepParam param = SweepParam::PulseCount;
  std::vector<double> values;
};

struct ExperimentConfig {
  std::string name;
  std::string description;
  Dynamics dynamics = Dynamics::Unitary;
  int qubits = 1;
  UnitSystem units = UnitSystem::Atomic;
  std::vector<DriftTerm> drift;
  std::vector<ControlTerm> controls;
  std::vector<CollapseTerm> collapse;  // rates already in inverse model time
  std::string target = "H";
  double total_time = 1.0;
  Eigen::Index intervals = 1;
  std::vector<InitSpec> initial;
  UncertaintyModel uncertainty;
  std::size_t test_samples = 2000;
  OptimizationConfig optimizer;
  OpenNormalization open_normalization = OpenNormalization::Lifted;
  std::filesystem::path output_dir;
  std::optional<SweepSpec> sweep;

  bool robust() const { return !uncertainty.channels.empty(); }
  HamiltonianModel hamiltonian() const;
  LindbladModel lindblad() const;
  TargetGate target_gate() const;
  ControlSchedule initial_schedule() const;
};

/// Parses and validates the JSON experiment format (documented in README.md).
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

struct PresetInfo {
  std::string name;
  std::string description;
};

std::vector<PresetInfo> list_presets();
/// JSON text of a named preset; throws ConfigError for unknown names.
std::string preset_text(std::string_view name);
ExperimentConfig preset_config(std::string_view name);

struct RunResult {
  OptimizationReport training;
  std::size_t training_samples = 1;
  double nominal_fidelity = 0.0;  // trained schedule at eps = 1 for every channel
  std::optional<TestReport> test;
};

/// Trains (and tests when uncertainty is configured), then writes
/// convergence.csv, pulses.csv and report.json under out_dir. Progress and
/// timing go to `log` when non-null; the files carry no timing so identical
/// inputs give identical bytes.
RunResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                         std::ostream* log = nullptr);

/// In-memory pipeline used by run_experiment and the sweeps.
RunResult execute(const ExperimentConfig& config, std::ostream* log = nullptr);

struct SweepRow {
  double value = 0.0;
  double train_fidelity = 0.0;
  double test_mean_fidelity = 0.0;  // nominal fidelity when no uncertainty is configured
  double test_min_fidelity = 0.0;
};

/// Re-runs the pipeline once per value: pulse-count retrains at that many
/// intervals, bound sets E on every channel, terminal-time sets T.
/// Writes sweep.csv and sweep.json under out_dir.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config, const SweepSpec& sweep,
                                const std::filesystem::path& out_dir,
                                std::ostream* log = nullptr);

ExperimentConfig with_sweep_value(const ExperimentConfig& config, SweepParam param, double value);

/// iteration,fidelity,infidelity,log10_infidelity with 17 significant digits;
/// log10 is taken of max(infidelity, 1e-16).
void write_convergence_csv(std::ostream& out, std::span<const double> fidelity_trace);
void write_sweep_csv(std::ostream& out, SweepParam param, std::span<const SweepRow> rows);
std::string report_json(const ExperimentConfig& config, const RunResult& result);

}  // namespace qpulse
