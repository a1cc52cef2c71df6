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

#include "qpulse/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qpulse/grape.hpp"

namespace qpulse {

using json = nlohmann::json;

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::string out = "invalid experiment config:";
  for (const auto& i : issues) out += "\n  - " + i;
  return out;
}

// Collects violations while walking the document so one load reports all of them.
class Checker {
 public:
  void fail(std::string issue) { issues_.push_back(std::move(issue)); }
  bool ok() const { return issues_.empty(); }
  void raise_if_any() const {
    if (!issues_.empty()) throw ConfigError(issues_);
  }

  const json* child(const json& parent, const std::string& key, const std::string& where,
                    bool required = true) {
    if (!parent.is_object()) {
      fail(where + ": expected an object");
      return nullptr;
    }
    const auto it = parent.find(key);
    if (it == parent.end()) {
      if (required) fail(where + ": missing '" + key + "'");
      return nullptr;
    }
    return &*it;
  }

  std::optional<double> number(const json& parent, const std::string& key,
                               const std::string& where, bool required = true) {
    const json* v = child(parent, key, where, required);
    if (!v) return std::nullopt;
    if (!v->is_number()) {
      fail(where + "." + key + ": expected a number");
      return std::nullopt;
    }
    return v->get<double>();
  }

  std::optional<std::string> text(const json& parent, const std::string& key,
                                  const std::string& where, bool required = true) {
    const json* v = child(parent, key, where, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      fail(where + "." + key + ": expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

 private:
  std::vector<std::string> issues_;
};

std::optional<double> parse_plain(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// Numbers, or strings holding a number or a fraction "a/b".
std::optional<double> coefficient_value(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) return std::nullopt;
  const auto s = v.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_plain(s);
  const auto num = parse_plain(std::string_view(s).substr(0, slash));
  const auto den = parse_plain(std::string_view(s).substr(slash + 1));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

std::optional<CMatrix> parse_operator(const json& v, int qubits, const std::string& where,
                                      Checker& check) {
  const auto dim = static_cast<Eigen::Index>(1) << qubits;
  auto word_matrix = [&](const std::string& word) -> std::optional<CMatrix> {
    if (static_cast<int>(word.size()) != qubits) {
      check.fail(where + ": operator '" + word + "' has " + std::to_string(word.size()) +
                 " factors, system has " + std::to_string(qubits) + " qubits");
      return std::nullopt;
    }
    try {
      return pauli::from_string(word);
    } catch (const ModelError& e) {
      check.fail(where + ": " + e.what());
      return std::nullopt;
    }
  };
  if (v.is_string()) return word_matrix(v.get<std::string>());
  if (!v.is_object() || v.empty()) {
    check.fail(where + ": operator must be a Pauli string or a non-empty {word: coefficient} map");
    return std::nullopt;
  }
  CMatrix sum = CMatrix::Zero(dim, dim);
  bool good = true;
  for (const auto& [word, coeff] : v.items()) {
    const auto c = coefficient_value(coeff);
    const auto m = word_matrix(word);
    if (!c) {
      check.fail(where + ": coefficient of '" + word + "' is not a number or fraction");
      good = false;
      continue;
    }
    if (!m) {
      good = false;
      continue;
    }
    sum += *c * *m;
  }
  if (!good) return std::nullopt;
  return sum;
}

std::optional<ChannelId> channel_ref(const json& term, const std::string& where, Checker& check) {
  const auto it = term.find("channel");
  if (it == term.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    check.fail(where + ".channel: expected a string");
    return std::nullopt;
  }
  return it->get<std::string>();
}

std::optional<InitSpec> parse_init(const json& v, const std::string& where, Checker& check) {
  const auto kind = check.text(v, "kind", where);
  if (!kind) return std::nullopt;
  if (*kind == "sin") {
    const auto amp = check.number(v, "amplitude", where, false);
    return init::SinScaled{amp.value_or(1.0)};
  }
  if (*kind == "constant") {
    const auto value = check.number(v, "value", where, false);
    return init::Constant{value.value_or(0.0)};
  }
  if (*kind == "random") {
    init::Random r;
    if (const json* s = check.child(v, "seed", where, false)) {
      if (s->is_number_unsigned()) r.seed = s->get<std::uint64_t>();
      else check.fail(where + ".seed: expected a non-negative integer");
    }
    if (const json* range = check.child(v, "range", where, false)) {
      if (range->is_array() && range->size() == 2 && (*range)[0].is_number() &&
          (*range)[1].is_number()) {
        r.lo = (*range)[0].get<double>();
        r.hi = (*range)[1].get<double>();
      } else {
        check.fail(where + ".range: expected [lo, hi]");
      }
    }
    return r;
  }
  check.fail(where + ".kind: unknown initial field '" + *kind + "' (sin, constant, random)");
  return std::nullopt;
}

ExperimentConfig parse_document(const json& doc) {
  Checker check;
  ExperimentConfig cfg;
  if (!doc.is_object()) throw ConfigError({"top level must be a JSON object"});

  cfg.name = check.text(doc, "name", "config").value_or("");
  cfg.description = check.text(doc, "description", "config", false).value_or("");

  // system
  std::set<ChannelId> referenced;
  if (const json* sys = check.child(doc, "system", "config")) {
    if (const json* q = check.child(*sys, "qubits", "system")) {
      if (q->is_number_integer() && (q->get<int>() == 1 || q->get<int>() == 2)) {
        cfg.qubits = q->get<int>();
      } else {
        check.fail("system.qubits: expected 1 or 2");
      }
    }
    const auto units = check.text(*sys, "units", "system", false).value_or("atomic");
    if (units == "atomic") cfg.units = UnitSystem::Atomic;
    else if (units == "GHz-ns") cfg.units = UnitSystem::GHzNs;
    else check.fail("system.units: expected 'atomic' or 'GHz-ns'");

    if (const json* drift = check.child(*sys, "drift", "system", false)) {
      if (!drift->is_array()) check.fail("system.drift: expected an array");
      else {
        for (std::size_t k = 0; k < drift->size(); ++k) {
          const json& t = (*drift)[k];
          const std::string where = "system.drift[" + std::to_string(k) + "]";
          DriftTerm term;
          if (const json* op = check.child(t, "operator", where)) {
            if (auto m = parse_operator(*op, cfg.qubits, where + ".operator", check)) term.op = *m;
          }
          term.coefficient = check.number(t, "coefficient", where, false).value_or(1.0);
          term.channel = channel_ref(t, where, check);
          if (term.channel) referenced.insert(*term.channel);
          cfg.drift.push_back(std::move(term));
        }
      }
    }

    if (const json* controls = check.child(*sys, "controls", "system")) {
      if (!controls->is_array() || controls->empty()) {
        check.fail("system.controls: expected a non-empty array");
      } else {
        for (std::size_t m = 0; m < controls->size(); ++m) {
          const json& t = (*controls)[m];
          const std::string where = "system.controls[" + std::to_string(m) + "]";
          ControlTerm term;
          term.name = check.text(t, "name", where, false).value_or("u_" + std::to_string(m));
          if (const json* op = check.child(t, "operator", where)) {
            if (auto mat = parse_operator(*op, cfg.qubits, where + ".operator", check)) term.op = *mat;
          }
          if (const json* b = check.child(t, "bounds", where)) {
            if (b->is_array() && b->size() == 2 && (*b)[0].is_number() && (*b)[1].is_number()) {
              term.bounds = {(*b)[0].get<double>(), (*b)[1].get<double>()};
              if (!(term.bounds.lo < term.bounds.hi)) check.fail(where + ".bounds: need lo < hi");
            } else {
              check.fail(where + ".bounds: expected [lo, hi]");
            }
          }
          term.channel = channel_ref(t, where, check);
          if (term.channel) referenced.insert(*term.channel);
          cfg.controls.push_back(std::move(term));
        }
      }
    }

    const json* diss = check.child(*sys, "dissipation", "system", false);
    const auto dynamics =
        check.text(*sys, "dynamics", "system", false).value_or(diss ? "lindblad" : "unitary");
    if (dynamics == "unitary") cfg.dynamics = Dynamics::Unitary;
    else if (dynamics == "lindblad") cfg.dynamics = Dynamics::Lindblad;
    else check.fail("system.dynamics: expected 'unitary' or 'lindblad'");
    if (diss && cfg.dynamics == Dynamics::Unitary) {
      check.fail("system.dissipation: only allowed with lindblad dynamics");
    }
    if (diss) {
      if (!diss->is_array()) check.fail("system.dissipation: expected an array");
      else {
        for (std::size_t k = 0; k < diss->size(); ++k) {
          const json& t = (*diss)[k];
          const std::string where = "system.dissipation[" + std::to_string(k) + "]";
          CollapseTerm term;
          if (const json* op = check.child(t, "operator", where)) {
            if (auto m = parse_operator(*op, cfg.qubits, where + ".operator", check)) term.op = *m;
          }
          const double rate = check.number(t, "rate", where).value_or(0.0);
          const auto units_s = check.text(t, "rate_units", where, false).value_or("per_time");
          double scale = 1.0;
          if (units_s == "per_second") {
            if (cfg.units != UnitSystem::GHzNs) {
              check.fail(where + ".rate_units: per_second needs GHz-ns units");
            }
            scale = 1e-9;
          } else if (units_s != "per_time") {
            check.fail(where + ".rate_units: expected 'per_second' or 'per_time'");
          }
          if (rate < 0.0) check.fail(where + ".rate: must be >= 0");
          term.rate = rate * scale;
          term.channel = channel_ref(t, where, check);
          if (term.channel) referenced.insert(*term.channel);
          cfg.collapse.push_back(std::move(term));
        }
      }
    }
  }

  // target
  cfg.target = check.text(doc, "target", "config").value_or("H");
  try {
    const auto gate = standard_gate(cfg.target);
    if (gate.qubits != cfg.qubits) {
      check.fail("target: gate " + cfg.target + " acts on " + std::to_string(gate.qubits) +
                 " qubit(s), system has " + std::to_string(cfg.qubits));
    }
  } catch (const ModelError& e) {
    check.fail(std::string("target: ") + e.what());
  }

  // time
  if (const json* time = check.child(doc, "time", "config")) {
    if (const auto t = check.number(*time, "total", "time")) {
      cfg.total_time = *t;
      if (!(*t > 0.0)) check.fail("time.total: must be > 0");
    }
    if (const json* n = check.child(*time, "intervals", "time")) {
      if (n->is_number_integer() && n->get<long long>() >= 1) {
        cfg.intervals = static_cast<Eigen::Index>(n->get<long long>());
      } else {
        check.fail("time.intervals: must be an integer >= 1");
      }
    }
  }

  // initial field
  if (const json* init = check.child(doc, "initial", "config", false)) {
    if (init->is_array()) {
      for (std::size_t m = 0; m < init->size(); ++m) {
        if (auto s = parse_init((*init)[m], "initial[" + std::to_string(m) + "]", check)) {
          cfg.initial.push_back(*s);
        }
      }
      if (init->size() != 1 && init->size() != cfg.controls.size()) {
        check.fail("initial: expected 1 or " + std::to_string(cfg.controls.size()) + " entries");
      }
    } else if (auto s = parse_init(*init, "initial", check)) {
      cfg.initial.push_back(*s);
    }
  }
  if (cfg.initial.empty()) cfg.initial.push_back(init::Constant{0.0});

  // uncertainty
  std::set<ChannelId> declared;
  if (const json* unc = check.child(doc, "uncertainty", "config", false)) {
    if (const json* channels = check.child(*unc, "channels", "uncertainty")) {
      if (!channels->is_array()) check.fail("uncertainty.channels: expected an array");
      else {
        for (std::size_t k = 0; k < channels->size(); ++k) {
          const json& c = (*channels)[k];
          const std::string where = "uncertainty.channels[" + std::to_string(k) + "]";
          UncertaintyChannel ch;
          ch.id = check.text(c, "id", where).value_or("");
          ch.bound = check.number(c, "bound", where).value_or(0.0);
          if (!(ch.bound >= 0.0 && ch.bound < 1.0)) check.fail(where + ".bound: must lie in [0, 1)");
          if (const json* g = check.child(c, "grid", where, false)) {
            if (g->is_number_integer() && g->get<int>() >= 1) ch.grid_count = g->get<int>();
            else check.fail(where + ".grid: must be an integer >= 1");
          }
          const auto dist = check.text(c, "distribution", where, false).value_or("uniform");
          if (dist == "uniform") ch.distribution = Distribution::Uniform;
          else if (dist == "gaussian") ch.distribution = Distribution::Gaussian;
          else check.fail(where + ".distribution: expected 'uniform' or 'gaussian'");
          if (!declared.insert(ch.id).second) check.fail(where + ": duplicate channel '" + ch.id + "'");
          cfg.uncertainty.channels.push_back(std::move(ch));
        }
      }
    }
    if (const json* n = check.child(*unc, "test_samples", "uncertainty", false)) {
      if (n->is_number_integer() && n->get<long long>() >= 1) {
        cfg.test_samples = static_cast<std::size_t>(n->get<long long>());
      } else {
        check.fail("uncertainty.test_samples: must be an integer >= 1");
      }
    }
  }
  for (const auto& id : referenced) {
    if (!declared.count(id)) {
      check.fail("channel '" + id + "' is referenced by a system term but not declared in uncertainty.channels");
    }
  }

  // optimizer
  if (const json* opt = check.child(doc, "optimizer", "config")) {
    auto& o = cfg.optimizer;
    if (const auto a = check.number(*opt, "step_size", "optimizer")) {
      o.step_size = *a;
      if (!(*a > 0.0)) check.fail("optimizer.step_size: must be > 0");
    }
    if (const json* it = check.child(*opt, "iterations", "optimizer")) {
      if (it->is_number_integer() && it->get<long long>() >= 0) o.max_iterations = it->get<int>();
      else check.fail("optimizer.iterations: must be an integer >= 0");
    }
    o.target_infidelity = check.number(*opt, "target_infidelity", "optimizer", false).value_or(0.0);
    if (o.target_infidelity < 0.0) check.fail("optimizer.target_infidelity: must be >= 0");
    if (const json* s = check.child(*opt, "seed", "optimizer", false)) {
      if (s->is_number_unsigned()) o.seed = s->get<std::uint64_t>();
      else check.fail("optimizer.seed: expected a non-negative integer");
    }
    const auto objective = check.text(*opt, "objective", "optimizer", false).value_or("phi");
    if (objective == "phi") o.objective = Objective::Phi;
    else if (objective == "fidelity") o.objective = Objective::Fidelity;
    else check.fail("optimizer.objective: expected 'phi' or 'fidelity'");
    const auto rule = check.text(*opt, "gradient_rule", "optimizer", false).value_or("simpson");
    if (rule == "midpoint") o.rule = GradientRule::Midpoint;
    else if (rule == "endpoint") o.rule = GradientRule::Endpoint;
    else if (rule == "simpson") o.rule = GradientRule::Simpson;
    else check.fail("optimizer.gradient_rule: expected 'midpoint', 'endpoint' or 'simpson'");
  }

  const auto norm = check.text(doc, "open_normalization", "config", false).value_or("lifted");
  if (norm == "lifted") cfg.open_normalization = OpenNormalization::Lifted;
  else if (norm == "literal") cfg.open_normalization = OpenNormalization::Literal;
  else check.fail("open_normalization: expected 'lifted' or 'literal'");

  cfg.output_dir = check.text(doc, "output", "config", false).value_or("out/" + cfg.name);

  if (const json* sw = check.child(doc, "sweep", "config", false)) {
    SweepSpec spec;
    if (const auto p = check.text(*sw, "param", "sweep")) {
      if (const auto parsed = parse_sweep_param(*p)) spec.param = *parsed;
      else check.fail("sweep.param: expected pulse-count, bound or terminal-time");
    }
    if (const json* values = check.child(*sw, "values", "sweep")) {
      if (!values->is_array() || values->empty()) check.fail("sweep.values: expected a non-empty array");
      else {
        for (const auto& v : *values) {
          if (v.is_number()) spec.values.push_back(v.get<double>());
          else check.fail("sweep.values: expected numbers");
        }
      }
    }
    cfg.sweep = std::move(spec);
  }

  check.raise_if_any();

  // Operator-level checks (Hermiticity, dimensions) go through the model constructors.
  try {
    if (cfg.dynamics == Dynamics::Lindblad) (void)cfg.lindblad();
    else (void)cfg.hamiltonian();
  } catch (const std::exception& e) {
    throw ConfigError({e.what()});
  }
  return cfg;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

std::string_view to_string(SweepParam param) {
  switch (param) {
    case SweepParam::PulseCount: return "pulse-count";
    case SweepParam::Bound: return "bound";
    case SweepParam::TerminalTime: return "terminal-time";
  }
  return "";
}

std::optional<SweepParam> parse_sweep_param(std::string_view text) {
  if (text == "pulse-count") return SweepParam::PulseCount;
  if (text == "bound") return SweepParam::Bound;
  if (text == "terminal-time") return SweepParam::TerminalTime;
  return std::nullopt;
}

HamiltonianModel ExperimentConfig::hamiltonian() const {
  return HamiltonianModel(drift, controls, units);
}

LindbladModel ExperimentConfig::lindblad() const { return LindbladModel(hamiltonian(), collapse); }

TargetGate ExperimentConfig::target_gate() const { return standard_gate(target); }

ControlSchedule ExperimentConfig::initial_schedule() const {
  return init_schedule(initial, hamiltonian(), total_time, intervals);
}

ExperimentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("parse error: ") + e.what()});
  }
  return parse_document(doc);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file '" + path.string() + "'"});
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

// ---------------------------------------------------------------------------
// Pipelines

namespace {

int log_every(int iterations) { return std::max(1, iterations / 10); }

IterationObserver progress(std::ostream* log, int iterations) {
  if (!log) return {};
  const int every = log_every(iterations);
  return [log, every](int k, double f) {
    if (k % every == 0) {
      *log << "  iter " << std::setw(7) << k << "  fidelity " << std::setprecision(12) << f
           << "  infidelity " << std::setprecision(3) << std::scientific << (1.0 - f)
           << std::defaultfloat << '\n';
    }
  };
}

}  // namespace

RunResult execute(const ExperimentConfig& config, std::ostream* log) {
  const ControlSchedule initial = config.initial_schedule();
  const auto observer = progress(log, config.optimizer.max_iterations);
  const UncertaintySample nominal = UncertaintySample::nominal();

  if (config.dynamics == Dynamics::Unitary) {
    const HamiltonianModel model = config.hamiltonian();
    const TargetGate target = config.target_gate();
    RunResult result{config.robust()
                         ? train(model, config.uncertainty, initial, target, config.optimizer,
                                 observer)
                         : optimize(model, nominal, initial, target, config.optimizer, observer),
                     training_grid(config.uncertainty).size(), 0.0, std::nullopt};
    result.nominal_fidelity =
        fidelity(target, propagate(model, nominal, result.training.schedule).terminal());
    if (config.robust()) {
      result.test = test(model, config.uncertainty, result.training.schedule, target,
                         config.test_samples, config.optimizer.seed);
    }
    return result;
  }

  const LindbladModel model = config.lindblad();
  const OpenTarget target = make_open_target(config.target_gate(), config.open_normalization);
  RunResult result{train(model, config.uncertainty, initial, target, config.optimizer, observer),
                   training_grid(config.uncertainty).size(), 0.0, std::nullopt};
  result.nominal_fidelity = evaluate_open(model, nominal, result.training.schedule, target,
                                          config.optimizer.rule, false)
                                .fidelity;
  if (config.robust()) {
    result.test = test(model, config.uncertainty, result.training.schedule, target,
                       config.test_samples, config.optimizer.seed);
  }
  return result;
}

void write_convergence_csv(std::ostream& out, std::span<const double> fidelity_trace) {
  out << "iteration,fidelity,infidelity,log10_infidelity\n" << std::setprecision(17);
  for (std::size_t k = 0; k < fidelity_trace.size(); ++k) {
    const double f = fidelity_trace[k];
    const double infid = 1.0 - f;
    out << k << ',' << f << ',' << infid << ',' << std::log10(std::max(infid, 1e-16)) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, SweepParam param, std::span<const SweepRow> rows) {
  std::string column(to_string(param));
  std::replace(column.begin(), column.end(), '-', '_');
  out << column << ",train_fidelity,test_mean_fidelity,test_min_fidelity,log10_test_infidelity\n"
      << std::setprecision(17);
  for (const auto& r : rows) {
    out << r.value << ',' << r.train_fidelity << ',' << r.test_mean_fidelity << ','
        << r.test_min_fidelity << ','
        << std::log10(std::max(1.0 - r.test_mean_fidelity, 1e-16)) << '\n';
  }
}

std::string report_json(const ExperimentConfig& config, const RunResult& result) {
  nlohmann::ordered_json j;
  const auto& tr = result.training;
  j["name"] = config.name;
  j["target"] = config.target;
  j["dynamics"] = config.dynamics == Dynamics::Unitary ? "unitary" : "lindblad";
  j["total_time"] = config.total_time;
  j["intervals"] = config.intervals;
  j["optimizer"] = {{"step_size", config.optimizer.step_size},
                    {"max_iterations", config.optimizer.max_iterations},
                    {"target_infidelity", config.optimizer.target_infidelity},
                    {"objective", to_string(config.optimizer.objective)},
                    {"gradient_rule", to_string(config.optimizer.rule)},
                    {"seed", config.optimizer.seed}};
  j["training"] = {{"samples", result.training_samples},
                   {"iterations", tr.iterations},
                   {"termination", to_string(tr.reason)},
                   {"initial_fidelity", tr.fidelity_trace.front()},
                   {"final_fidelity", tr.final_fidelity()},
                   {"final_infidelity", 1.0 - tr.final_fidelity()}};
  j["nominal_fidelity"] = result.nominal_fidelity;
  if (result.test) {
    j["test"] = nlohmann::ordered_json::parse(to_json(*result.test));
  } else {
    j["test"] = nullptr;
  }
  return j.dump(2) + "\n";
}

RunResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                         std::ostream* log) {
  if (log) *log << "experiment " << config.name << " (target " << config.target << ")\n";
  RunResult result = execute(config, log);
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream out(out_dir / "convergence.csv");
    write_convergence_csv(out, result.training.fidelity_trace);
  }
  write_pulses_csv(out_dir / "pulses.csv", result.training.schedule);
  {
    std::ofstream out(out_dir / "report.json");
    out << report_json(config, result);
  }
  if (log) {
    *log << "  done: " << result.training.iterations << " iterations ("
         << to_string(result.training.reason) << "), final fidelity " << std::setprecision(12)
         << result.training.final_fidelity() << ", " << std::setprecision(3)
         << result.training.wall_seconds << " s\n";
    if (result.test) {
      *log << "  test: " << result.test->count << " samples, mean " << std::setprecision(6)
           << result.test->mean << ", min " << result.test->min << '\n';
    }
    *log << "  artifacts in " << out_dir.string() << '\n';
  }
  return result;
}

ExperimentConfig with_sweep_value(const ExperimentConfig& config, SweepParam param, double value) {
  ExperimentConfig c = config;
  c.sweep.reset();
  switch (param) {
    case SweepParam::PulseCount: {
      const auto n = static_cast<long long>(std::llround(value));
      if (n < 1 || std::abs(value - static_cast<double>(n)) > 1e-9) {
        throw ConfigError({"sweep pulse-count: values must be positive integers"});
      }
      c.intervals = static_cast<Eigen::Index>(n);
      break;
    }
    case SweepParam::Bound:
      if (!(value >= 0.0 && value < 1.0)) throw ConfigError({"sweep bound: values must lie in [0, 1)"});
      if (c.uncertainty.channels.empty()) {
        throw ConfigError({"sweep bound: config declares no uncertainty channels"});
      }
      for (auto& ch : c.uncertainty.channels) ch.bound = value;
      break;
    case SweepParam::TerminalTime:
      if (!(value > 0.0)) throw ConfigError({"sweep terminal-time: values must be > 0"});
      c.total_time = value;
      break;
  }
  return c;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config, const SweepSpec& sweep,
                                const std::filesystem::path& out_dir, std::ostream* log) {
  std::vector<SweepRow> rows;
  for (double v : sweep.values) {
    const ExperimentConfig c = with_sweep_value(config, sweep.param, v);
    if (log) *log << "sweep " << to_string(sweep.param) << " = " << v << '\n';
    const RunResult r = execute(c, nullptr);
    SweepRow row{v, r.training.final_fidelity(), r.nominal_fidelity, r.nominal_fidelity};
    if (r.test) {
      row.test_mean_fidelity = r.test->mean;
      row.test_min_fidelity = r.test->min;
    }
    if (log) {
      *log << "  train " << std::setprecision(8) << row.train_fidelity << "  test mean "
           << row.test_mean_fidelity << "  (" << std::setprecision(3)
           << r.training.wall_seconds << " s)\n";
    }
    rows.push_back(row);
  }
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream out(out_dir / "sweep.csv");
    write_sweep_csv(out, sweep.param, rows);
  }
  {
    nlohmann::ordered_json j;
    j["name"] = config.name;
    j["param"] = to_string(sweep.param);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"value", r.value},
                           {"train_fidelity", r.train_fidelity},
                           {"test_mean_fidelity", r.test_mean_fidelity},
                           {"test_min_fidelity", r.test_min_fidelity}});
    }
    std::ofstream out(out_dir / "sweep.json");
    out << j.dump(2) << '\n';
  }
  return rows;
}

}  // namespace qpulse
