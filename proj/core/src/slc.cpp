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

#include "qpulse/slc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

namespace qpulse {
namespace {

std::vector<double> channel_grid(const UncertaintyChannel& c) {
  if (c.bound == 0.0) return {1.0};
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(c.grid_count));
  const double step = c.bound / static_cast<double>(c.grid_count);
  for (int m = 1; m <= c.grid_count; ++m) {
    values.push_back((1.0 - c.bound) + step * static_cast<double>(2 * m - 1));
  }
  return values;
}

template <class EvalFn>
Evaluation average(std::span<const UncertaintySample> samples, const OptimizationConfig& config,
                   bool with_gradient, EvalFn&& eval_one) {
  if (samples.empty()) throw std::invalid_argument("augmented objective needs at least one sample");
  Evaluation out;
  for (const auto& s : samples) {
    SampleEvaluation e = eval_one(s, with_gradient);
    out.fidelity += e.fidelity;
    if (!with_gradient) continue;
    RealTable g =
        config.objective == Objective::Phi ? std::move(e.phi_gradient) : e.fidelity_gradient();
    if (out.gradient.size() == 0) {
      out.gradient = std::move(g);
    } else {
      out.gradient += g;
    }
  }
  const auto n = static_cast<double>(samples.size());
  out.fidelity /= n;
  if (with_gradient) out.gradient /= n;
  return out;
}

}  // namespace

std::vector<UncertaintySample> training_grid(const UncertaintyModel& uncertainty) {
  uncertainty.validate();
  std::vector<UncertaintySample> grid(1);
  for (const auto& c : uncertainty.channels) {
    const auto values = channel_grid(c);
    std::vector<UncertaintySample> next;
    next.reserve(grid.size() * values.size());
    for (const auto& partial : grid) {
      for (double v : values) {
        UncertaintySample s = partial;
        s.set(c.id, v);
        next.push_back(std::move(s));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

std::vector<UncertaintySample> draw_samples(const UncertaintyModel& uncertainty, std::size_t count,
                                            std::uint64_t seed) {
  uncertainty.validate();
  std::mt19937_64 rng(seed);
  std::vector<UncertaintySample> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    UncertaintySample s;
    for (const auto& c : uncertainty.channels) {
      const double lo = 1.0 - c.bound;
      const double hi = 1.0 + c.bound;
      double eps = 1.0;
      if (c.bound > 0.0) {
        if (c.distribution == Distribution::Uniform) {
          eps = std::uniform_real_distribution<double>(lo, hi)(rng);
        } else {
          std::normal_distribution<double> normal(1.0, 0.5 * c.bound);
          do {
            eps = normal(rng);
          } while (eps < lo || eps > hi);
        }
      }
      s.set(c.id, eps);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Evaluator make_unitary_evaluator(const HamiltonianModel& model,
                                 std::span<const UncertaintySample> samples,
                                 const TargetGate& target, const OptimizationConfig& config) {
  return [model, samples = std::vector<UncertaintySample>(samples.begin(), samples.end()), target,
          config](const ControlSchedule& schedule, bool with_gradient) {
    return average(samples, config, with_gradient, [&](const UncertaintySample& s, bool g) {
      return evaluate_unitary(model, s, schedule, target, config.rule, g);
    });
  };
}

Evaluator make_open_evaluator(const LindbladModel& model,
                              std::span<const UncertaintySample> samples,
                              const OpenTarget& target, const OptimizationConfig& config) {
  return [model, samples = std::vector<UncertaintySample>(samples.begin(), samples.end()), target,
          config](const ControlSchedule& schedule, bool with_gradient) {
    return average(samples, config, with_gradient, [&](const UncertaintySample& s, bool g) {
      return evaluate_open(model, s, schedule, target, config.rule, g);
    });
  };
}

double augmented_fidelity(const HamiltonianModel& model, std::span<const UncertaintySample> samples,
                          const ControlSchedule& schedule, const TargetGate& target) {
  OptimizationConfig config;
  return make_unitary_evaluator(model, samples, target, config)(schedule, false).fidelity;
}

RealTable augmented_gradient(const HamiltonianModel& model,
                             std::span<const UncertaintySample> samples,
                             const ControlSchedule& schedule, const TargetGate& target,
                             Objective objective, GradientRule rule) {
  OptimizationConfig config;
  config.objective = objective;
  config.rule = rule;
  return make_unitary_evaluator(model, samples, target, config)(schedule, true).gradient;
}

OptimizationReport train(const HamiltonianModel& model, const UncertaintyModel& uncertainty,
                         const ControlSchedule& initial, const TargetGate& target,
                         const OptimizationConfig& config, const IterationObserver& observer) {
  const auto grid = training_grid(uncertainty);
  return ascend(make_unitary_evaluator(model, grid, target, config), initial, model, config,
                observer);
}

OptimizationReport train(const LindbladModel& model, const UncertaintyModel& uncertainty,
                         const ControlSchedule& initial, const OpenTarget& target,
                         const OptimizationConfig& config, const IterationObserver& observer) {
  const auto grid = training_grid(uncertainty);
  return ascend(make_open_evaluator(model, grid, target, config), initial, model.hamiltonian(),
                config, observer);
}

TestReport summarize(std::span<const double> fidelities, std::uint64_t seed) {
  if (fidelities.empty()) throw std::invalid_argument("summarize: no fidelities");
  TestReport r;
  r.count = fidelities.size();
  r.seed = seed;
  const auto [lo, hi] = std::minmax_element(fidelities.begin(), fidelities.end());
  r.min = *lo;
  r.max = *hi;
  double sum = 0.0;
  for (double f : fidelities) sum += f;
  r.mean = std::clamp(sum / static_cast<double>(r.count), r.min, r.max);
  double sq = 0.0;
  for (double f : fidelities) sq += (f - r.mean) * (f - r.mean);
  r.stddev = std::sqrt(sq / static_cast<double>(r.count));

  r.histogram_lo = r.min;
  r.histogram_hi = r.max;
  r.histogram.assign(kHistogramBuckets, 0);
  const double width = (r.max - r.min) / static_cast<double>(kHistogramBuckets);
  for (double f : fidelities) {
    std::size_t b = 0;
    if (width > 0.0) {
      b = std::min(kHistogramBuckets - 1, static_cast<std::size_t>((f - r.min) / width));
    }
    ++r.histogram[b];
  }
  return r;
}

TestReport test(const HamiltonianModel& model, const UncertaintyModel& uncertainty,
                const ControlSchedule& schedule, const TargetGate& target, std::size_t count,
                std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("test: sample count must be >= 1");
  const auto samples = draw_samples(uncertainty, count, seed);
  std::vector<double> f;
  f.reserve(count);
  for (const auto& s : samples) f.push_back(fidelity(target, propagate(model, s, schedule).terminal()));
  return summarize(f, seed);
}

TestReport test(const LindbladModel& model, const UncertaintyModel& uncertainty,
                const ControlSchedule& schedule, const OpenTarget& target, std::size_t count,
                std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("test: sample count must be >= 1");
  const auto samples = draw_samples(uncertainty, count, seed);
  std::vector<double> f;
  f.reserve(count);
  for (const auto& s : samples) {
    f.push_back(evaluate_open(model, s, schedule, target, GradientRule::Midpoint, false).fidelity);
  }
  return summarize(f, seed);
}

std::string to_json(const TestReport& report) {
  nlohmann::ordered_json j;
  j["count"] = report.count;
  j["mean"] = report.mean;
  j["min"] = report.min;
  j["max"] = report.max;
  j["stddev"] = report.stddev;
  j["histogram"] = {{"lo", report.histogram_lo},
                    {"hi", report.histogram_hi},
                    {"counts", report.histogram}};
  j["seed"] = report.seed;
  return j.dump(2);
}

}  // namespace qpulse
