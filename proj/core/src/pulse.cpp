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

#include "qpulse/pulse.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>

namespace qpulse {

ControlSchedule::ControlSchedule(double total_time, RealTable values)
    : total_time_(total_time), values_(std::move(values)) {
  if (!(total_time_ > 0.0) || !std::isfinite(total_time_)) {
    throw std::invalid_argument("control schedule: total time must be positive");
  }
  if (values_.cols() < 1) {
    throw std::invalid_argument("control schedule: need at least one interval");
  }
}

std::vector<double> ControlSchedule::column(Eigen::Index j) const {
  std::vector<double> out(static_cast<std::size_t>(values_.rows()));
  for (Eigen::Index m = 0; m < values_.rows(); ++m) {
    out[static_cast<std::size_t>(m)] = values_(m, j);
  }
  return out;
}

ControlSchedule init_schedule(std::span<const InitSpec> specs, const HamiltonianModel& model,
                              double total_time, Eigen::Index intervals) {
  const auto controls = static_cast<Eigen::Index>(model.control_count());
  if (intervals < 1) {
    throw std::invalid_argument("init_schedule: interval count must be >= 1");
  }
  if (specs.size() != 1 && specs.size() != model.control_count()) {
    throw std::invalid_argument("init_schedule: expected 1 or " +
                                std::to_string(model.control_count()) + " initial specs");
  }
  const double dt = total_time / static_cast<double>(intervals);
  RealTable values(controls, intervals);
  for (Eigen::Index m = 0; m < controls; ++m) {
    const InitSpec& spec = specs.size() == 1 ? specs[0] : specs[static_cast<std::size_t>(m)];
    if (const auto* s = std::get_if<init::SinScaled>(&spec)) {
      for (Eigen::Index j = 0; j < intervals; ++j) {
        values(m, j) = s->amplitude * std::sin((static_cast<double>(j) + 0.5) * dt);
      }
    } else if (const auto* c = std::get_if<init::Constant>(&spec)) {
      values.row(m).setConstant(c->value);
    } else {
      const auto& r = std::get<init::Random>(spec);
      std::mt19937_64 rng(r.seed + static_cast<std::uint64_t>(m));
      std::uniform_real_distribution<double> dist(r.lo, r.hi);
      for (Eigen::Index j = 0; j < intervals; ++j) values(m, j) = dist(rng);
    }
  }
  return clip(ControlSchedule(total_time, std::move(values)), model);
}

ControlSchedule clip(ControlSchedule schedule, const HamiltonianModel& model) {
  if (static_cast<std::size_t>(schedule.controls()) != model.control_count()) {
    throw DimensionError("clip: schedule has " + std::to_string(schedule.controls()) +
                         " controls, model has " + std::to_string(model.control_count()));
  }
  RealTable& u = schedule.values();
  for (Eigen::Index m = 0; m < u.rows(); ++m) {
    const Bounds b = model.controls()[static_cast<std::size_t>(m)].bounds;
    u.row(m) = u.row(m).cwiseMax(b.lo).cwiseMin(b.hi);
  }
  return schedule;
}

ControlSchedule resample(const ControlSchedule& schedule, Eigen::Index intervals) {
  if (intervals < 1) {
    throw std::invalid_argument("resample: interval count must be >= 1");
  }
  const Eigen::Index old_n = schedule.intervals();
  if (intervals == old_n) return schedule;

  // Work on the integer lattice of T / (old_n * intervals): old interval k
  // spans [k * intervals, (k+1) * intervals), new interval j spans
  // [j * old_n, (j+1) * old_n).
  RealTable out = RealTable::Zero(schedule.controls(), intervals);
  for (Eigen::Index j = 0; j < intervals; ++j) {
    const Eigen::Index lo = j * old_n;
    const Eigen::Index hi = lo + old_n;
    for (Eigen::Index k = lo / intervals; k < old_n && k * intervals < hi; ++k) {
      const Eigen::Index overlap =
          std::min(hi, (k + 1) * intervals) - std::max(lo, k * intervals);
      if (overlap <= 0) continue;
      out.col(j) += schedule.values().col(k) * static_cast<double>(overlap);
    }
    out.col(j) /= static_cast<double>(old_n);
  }
  return ControlSchedule(schedule.total_time(), std::move(out));
}

void write_pulses_csv(std::ostream& out, const ControlSchedule& schedule) {
  out << "t_start,t_end";
  for (Eigen::Index m = 0; m < schedule.controls(); ++m) out << ",u_" << m;
  out << '\n';
  out << std::setprecision(17);
  const double dt = schedule.dt();
  for (Eigen::Index j = 0; j < schedule.intervals(); ++j) {
    const double t0 = static_cast<double>(j) * dt;
    const double t1 = j + 1 == schedule.intervals() ? schedule.total_time()
                                                     : static_cast<double>(j + 1) * dt;
    out << t0 << ',' << t1;
    for (Eigen::Index m = 0; m < schedule.controls(); ++m) out << ',' << schedule(m, j);
    out << '\n';
  }
}

void write_pulses_csv(const std::filesystem::path& path, const ControlSchedule& schedule) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_pulses_csv(out, schedule);
}

namespace {

std::vector<double> parse_row(const std::string& line, std::size_t line_no) {
  std::vector<double> row;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t comma = std::min(line.find(',', pos), line.size());
    const std::string field = line.substr(pos, comma - pos);
    double v = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw std::runtime_error("pulses.csv line " + std::to_string(line_no) +
                               ": cannot parse '" + field + "'");
    }
    row.push_back(v);
    pos = comma + 1;
  }
  return row;
}

}  // namespace

ControlSchedule read_pulses_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("t_start,t_end", 0) != 0) {
    throw std::runtime_error("pulses.csv: missing 't_start,t_end,...' header");
  }
  const auto columns = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;
  if (columns < 3) throw std::runtime_error("pulses.csv: no control columns");

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto row = parse_row(line, line_no);
    if (row.size() != columns) {
      throw std::runtime_error("pulses.csv line " + std::to_string(line_no) +
                               ": expected " + std::to_string(columns) + " fields");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("pulses.csv: no intervals");

  RealTable values(static_cast<Eigen::Index>(columns - 2), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t m = 0; m + 2 < columns; ++m) {
      values(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j)) = rows[j][m + 2];
    }
  }
  return ControlSchedule(rows.back()[1], std::move(values));
}

ControlSchedule read_pulses_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_pulses_csv(in);
}

}  // namespace qpulse
