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

// qpulse: learn piecewise-constant control pulses for quantum gates.
//
//   qpulse run <config.json> [--out DIR]
//   qpulse preset <name> [--out DIR] [--seed S] [--iterations K] [--target G]
//   qpulse sweep <config.json> --param {pulse-count|bound|terminal-time} --values v1 v2 ...
//   qpulse list-presets
//   qpulse show-preset <name>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpulse/experiment.hpp"

namespace {

using qpulse::ExperimentConfig;

std::filesystem::path output_for(const ExperimentConfig& cfg, const std::string& out) {
  return out.empty() ? cfg.output_dir : std::filesystem::path(out);
}

int run_or_sweep(const ExperimentConfig& cfg, const std::string& out) {
  const auto dir = output_for(cfg, out);
  if (cfg.sweep) {
    qpulse::run_sweep(cfg, *cfg.sweep, dir, &std::cout);
    std::cout << "sweep written to " << (dir / "sweep.csv").string() << '\n';
  } else {
    qpulse::run_experiment(cfg, dir, &std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient-based pulse learning for robust quantum gates"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;

  auto* run = app.add_subcommand("run", "train (and test) the experiment described by a config file");
  run->add_option("config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "output directory (default: the config's 'output')");

  std::string preset_name;
  std::optional<std::uint64_t> seed;
  std::optional<int> iterations;
  std::optional<std::string> target;
  auto* preset = app.add_subcommand("preset", "run a built-in experiment");
  preset->add_option("name", preset_name, "preset name (see list-presets)")->required();
  preset->add_option("--out", out_dir, "output directory (default: out/<name>)");
  preset->add_option("--seed", seed, "random seed for test sampling");
  preset->add_option("--iterations", iterations, "override the iteration budget");
  preset->add_option("--target", target, "override the target gate (H, S, T_pi8, CNOT)");

  std::string sweep_param;
  std::vector<double> sweep_values;
  auto* sweep = app.add_subcommand("sweep", "re-run an experiment over a parameter grid");
  sweep->add_option("config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  sweep->add_option("--param", sweep_param, "pulse-count, bound or terminal-time")
      ->required()
      ->check(CLI::IsMember({"pulse-count", "bound", "terminal-time"}));
  sweep->add_option("--values", sweep_values, "parameter values")->required()->expected(1, -1);
  sweep->add_option("--out", out_dir, "output directory (default: the config's 'output')");

  auto* list = app.add_subcommand("list-presets", "list built-in experiments");

  std::string show_name;
  auto* show = app.add_subcommand("show-preset", "print a preset's config JSON");
  show->add_option("name", show_name, "preset name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      return run_or_sweep(qpulse::load_config(config_path), out_dir);
    }
    if (*preset) {
      ExperimentConfig cfg = qpulse::preset_config(preset_name);
      if (seed) cfg.optimizer.seed = *seed;
      if (iterations) cfg.optimizer.max_iterations = *iterations;
      if (target) {
        cfg.target = *target;
        (void)cfg.target_gate();
      }
      return run_or_sweep(cfg, out_dir);
    }
    if (*sweep) {
      const ExperimentConfig cfg = qpulse::load_config(config_path);
      const qpulse::SweepSpec spec{*qpulse::parse_sweep_param(sweep_param), sweep_values};
      const auto dir = output_for(cfg, out_dir);
      qpulse::run_sweep(cfg, spec, dir, &std::cout);
      std::cout << "sweep written to " << (dir / "sweep.csv").string() << '\n';
      return 0;
    }
    if (*list) {
      for (const auto& p : qpulse::list_presets()) {
        std::cout << p.name << "\n    " << p.description << '\n';
      }
      return 0;
    }
    if (*show) {
      std::cout << qpulse::preset_text(show_name);
      return 0;
    }
  } catch (const qpulse::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
