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
#include <variant>
#include <vector>

#include "qpulse/model.hpp"

namespace qpulse {

/// Piecewise-constant control table: values(m, j) is control m on interval j,
/// each interval lasting T / N.
class ControlSchedule {
 public:
  ControlSchedule(double total_time, RealTable values);

  double total_time() const { return total_time_; }
  Eigen::Index intervals() const { return values_.cols(); }
  Eigen::Index controls() const { return values_.rows(); }
  double dt() const { return total_time_ / static_cast<double>(values_.cols()); }

  const RealTable& values() const { return values_; }
  RealTable& values() { return values_; }
  double operator()(Eigen::Index m, Eigen::Index j) const { return values_(m, j); }

  /// Amplitudes of every control on interval j.
  std::vector<double> column(Eigen::Index j) const;

  friend bool operator==(const ControlSchedule&, const ControlSchedule&) = default;

 private:
  double total_time_;
  RealTable values_;
};

namespace init {
struct SinScaled {
  double amplitude = 1.0;  // u(t) = amplitude * sin(t)
};
struct Constant {
  double value = 0.0;
};
struct Random {
  std::uint64_t seed = 0;
  double lo = -1.0;
  double hi = 1.0;
};
}  // namespace init

using InitSpec = std::variant<init::SinScaled, init::Constant, init::Random>;

/// Evaluates each control's spec at interval midpoints (j + 1/2) dt and clips
/// to the control's bounds. `specs` holds either one spec for all controls or
/// one per control.
ControlSchedule init_schedule(std::span<const InitSpec> specs, const HamiltonianModel& model,
                              double total_time, Eigen::Index intervals);

/// Projects every entry onto its control's bound interval.
ControlSchedule clip(ControlSchedule schedule, const HamiltonianModel& model);

/// Time-average of the piecewise-constant signal over each of `intervals`
/// equal sub-intervals; preserves the integral of every control.
ControlSchedule resample(const ControlSchedule& schedule, Eigen::Index intervals);

/// CSV with header t_start,t_end,u_0,...; one row per interval, 17
/// significant digits so values re-parse exactly.
void write_pulses_csv(std::ostream& out, const ControlSchedule& schedule);
void write_pulses_csv(const std::filesystem::path& path, const ControlSchedule& schedule);
ControlSchedule read_pulses_csv(std::istream& in);
ControlSchedule read_pulses_csv(const std::filesystem::path& path);

}  // namespace qpulse
