// Copyright 2026 The raqprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "raqprep/experiments/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "raqprep/sampling/pool.hpp"

namespace raqprep {

namespace {

using Keys = std::set<std::string>;

void require_map(const YAML::Node &node, const std::string &where) {
    if (!node.IsMap()) throw ConfigError("'" + where + "' must be a mapping");
}

void reject_unknown(const YAML::Node &node, const Keys &allowed, const std::string &where) {
    for (const auto &kv : node) {
        const std::string key = kv.first.as<std::string>();
        if (!allowed.contains(key)) {
            std::string list;
            for (const auto &k : allowed) list += (list.empty() ? "" : ", ") + k;
            throw ConfigError("unknown key '" + where + key + "' (allowed: " + list + ")");
        }
    }
}

template <typename T>
void read(const YAML::Node &node, const char *key, T &out, const std::string &where) {
    const YAML::Node v = node[key];
    if (!v) return;
    try {
        out = v.as<T>();
    } catch (const YAML::Exception &) {
        throw ConfigError("bad value for '" + where + key + "'");
    }
}

template <typename T>
void read_optional(const YAML::Node &node, const char *key, std::optional<T> &out, const std::string &where) {
    const YAML::Node v = node[key];
    if (!v || v.IsNull()) {
        out.reset();
        return;
    }
    T value{};
    read(node, key, value, where);
    out = value;
}

template <typename E, typename F>
void read_enum(const YAML::Node &node, const char *key, E &out, F parse, const std::string &where) {
    std::string name;
    read(node, key, name, where);
    if (name.empty()) return;
    try {
        out = parse(name);
    } catch (const InvalidInput &e) {
        throw ConfigError("'" + where + key + "': " + e.what());
    }
}

SweepAxis sweep_axis_from_string(const std::string &name) {
    if (name == "steps") return SweepAxis::steps;
    if (name == "pool_size") return SweepAxis::pool_size;
    if (name == "n_qubits") return SweepAxis::n_qubits;
    throw InvalidInput("unknown sweep axis '" + name + "' (expected steps, pool_size or n_qubits)");
}

ScalingMetric scaling_metric_from_string(const std::string &name) {
    if (name == "steps") return ScalingMetric::steps;
    if (name == "pool_size") return ScalingMetric::pool_size;
    throw InvalidInput("unknown scaling metric '" + name + "' (expected steps or pool_size)");
}

void require_increasing(const std::vector<int> &values, const std::string &what) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1]) throw ConfigError(what + " must be strictly increasing");
    }
}

}  // namespace

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::steps:
            return "steps";
        case SweepAxis::pool_size:
            return "pool_size";
        case SweepAxis::n_qubits:
            return "n_qubits";
    }
    return "unknown";
}

std::string to_string(ScalingMetric metric) {
    return metric == ScalingMetric::steps ? "steps" : "pool_size";
}

std::string to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::csv:
            return "csv";
        case OutputFormat::jsonl:
            return "jsonl";
        case OutputFormat::both:
            return "both";
    }
    return "unknown";
}

OutputFormat output_format_from_string(const std::string &name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "jsonl") return OutputFormat::jsonl;
    if (name == "both") return OutputFormat::both;
    throw InvalidInput("unknown output format '" + name + "' (expected csv, jsonl or both)");
}

ExperimentConfig ExperimentConfig::parse(const std::string &yaml_text) {
    YAML::Node root;
    try {
        root = YAML::Load(yaml_text);
    } catch (const YAML::Exception &e) {
        throw ConfigError(std::string("config is not valid YAML: ") + e.what());
    }
    ExperimentConfig cfg;
    if (!root || root.IsNull()) return cfg;
    require_map(root, "<root>");
    reject_unknown(root, {"name", "seed", "trials", "hamiltonian", "strategy", "run", "sweep", "cool", "output", "verify"},
                   "");
    read(root, "name", cfg.name, "");
    read(root, "seed", cfg.seed, "");
    read(root, "trials", cfg.trials, "");

    if (const YAML::Node h = root["hamiltonian"]) {
        require_map(h, "hamiltonian");
        reject_unknown(h, {"graph", "target"}, "hamiltonian.");
        read(h, "graph", cfg.hamiltonian.graph, "hamiltonian.");
        read_optional(h, "target", cfg.hamiltonian.target, "hamiltonian.");
    }
    if (const YAML::Node s = root["strategy"]) {
        require_map(s, "strategy");
        reject_unknown(s, {"kind", "generator", "design", "layers", "pool_size"}, "strategy.");
        read_enum(s, "kind", cfg.strategy.kind, strategy_kind_from_string, "strategy.");
        read_optional(s, "generator", cfg.strategy.generator, "strategy.");
        read_enum(s, "design", cfg.strategy.design.flavor, two_design_flavor_from_string, "strategy.");
        read(s, "layers", cfg.strategy.design.layers, "strategy.");
        read(s, "pool_size", cfg.strategy.pool_size, "strategy.");
    }
    if (const YAML::Node r = root["run"]) {
        require_map(r, "run");
        reject_unknown(r,
                       {"max_steps", "gamma", "repeats", "gradient", "shots", "fd_step", "initial_state", "stop",
                        "alpha_threshold", "grad_tol", "patience"},
                       "run.");
        read(r, "max_steps", cfg.run.max_steps, "run.");
        if (const YAML::Node g = r["gamma"]) {
            if (g.IsScalar() && g.Scalar() == "auto") {
                cfg.run.gamma.reset();
            } else {
                read_optional(r, "gamma", cfg.run.gamma, "run.");
            }
        }
        read(r, "repeats", cfg.run.repeats, "run.");
        read_enum(r, "gradient", cfg.run.gradient.mode, gradient_mode_from_string, "run.");
        read(r, "shots", cfg.run.gradient.shots, "run.");
        read(r, "fd_step", cfg.run.gradient.fd_step, "run.");
        read(r, "initial_state", cfg.run.initial_state, "run.");
        read_enum(r, "stop", cfg.run.stop.kind, stop_kind_from_string, "run.");
        read(r, "alpha_threshold", cfg.run.stop.alpha_threshold, "run.");
        read(r, "grad_tol", cfg.run.stop.grad_tol, "run.");
        read(r, "patience", cfg.run.stop.patience, "run.");
    }
    if (const YAML::Node w = root["sweep"]) {
        require_map(w, "sweep");
        reject_unknown(w, {"axis", "strategies", "values", "graph_family", "threshold", "metric", "pool_sizes"}, "sweep.");
        read_enum(w, "axis", cfg.sweep.axis, sweep_axis_from_string, "sweep.");
        if (const YAML::Node list = w["strategies"]) {
            std::vector<std::string> names;
            read(w, "strategies", names, "sweep.");
            cfg.sweep.strategies.clear();
            for (const auto &name : names) {
                try {
                    cfg.sweep.strategies.push_back(strategy_kind_from_string(name));
                } catch (const InvalidInput &e) {
                    throw ConfigError(std::string("'sweep.strategies': ") + e.what());
                }
            }
        }
        read(w, "values", cfg.sweep.values, "sweep.");
        read(w, "graph_family", cfg.sweep.graph_family, "sweep.");
        read(w, "threshold", cfg.sweep.threshold, "sweep.");
        read_enum(w, "metric", cfg.sweep.metric, scaling_metric_from_string, "sweep.");
        read(w, "pool_sizes", cfg.sweep.pool_sizes, "sweep.");
    }
    if (const YAML::Node c = root["cool"]) {
        require_map(c, "cool");
        reject_unknown(c, {"ancilla", "target", "initial", "kick"}, "cool.");
        read(c, "ancilla", cfg.cool.ancilla, "cool.");
        read(c, "target", cfg.cool.target, "cool.");
        read(c, "initial", cfg.cool.initial, "cool.");
        read_enum(c, "kick", cfg.cool.kick, kick_policy_from_string, "cool.");
    }
    if (const YAML::Node o = root["output"]) {
        require_map(o, "output");
        reject_unknown(o, {"format", "trace_trials", "checkpoints_per_decade"}, "output.");
        read_enum(o, "format", cfg.output.format, output_format_from_string, "output.");
        read(o, "trace_trials", cfg.output.trace_trials, "output.");
        read(o, "checkpoints_per_decade", cfg.output.checkpoints_per_decade, "output.");
    }
    if (const YAML::Node v = root["verify"]) {
        require_map(v, "verify");
        reject_unknown(v, {"samples", "steps", "pairs", "trials", "epsilon"}, "verify.");
        read(v, "samples", cfg.verify.samples, "verify.");
        read(v, "steps", cfg.verify.steps, "verify.");
        read(v, "pairs", cfg.verify.pairs, "verify.");
        read(v, "trials", cfg.verify.trials, "verify.");
        read(v, "epsilon", cfg.verify.epsilon, "verify.");
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void ExperimentConfig::validate() const {
    if (name.empty()) throw ConfigError("name must be nonempty");
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
            throw ConfigError("name may contain only letters, digits, '_', '-' and '.'");
        }
    }
    if (trials < 1) throw ConfigError("trials must be at least 1");
    if (run.max_steps < 1) throw ConfigError("run.max_steps must be at least 1");
    if (run.repeats < 1) throw ConfigError("run.repeats must be at least 1");
    if (run.gamma && !(*run.gamma > 0.0)) throw ConfigError("run.gamma must be positive or 'auto'");
    if (strategy.pool_size < 0) throw ConfigError("strategy.pool_size must be nonnegative");
    if (sweep.strategies.empty()) throw ConfigError("sweep.strategies must be nonempty");
    for (std::size_t i = 0; i < sweep.strategies.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (sweep.strategies[i] == sweep.strategies[j]) throw ConfigError("sweep.strategies has duplicates");
        }
    }
    require_increasing(sweep.values, "sweep.values");
    require_increasing(sweep.pool_sizes, "sweep.pool_sizes");
    for (int v : sweep.values) {
        if (v < (sweep.axis == SweepAxis::steps ? 0 : 1)) throw ConfigError("sweep.values out of range");
    }
    if (!(sweep.threshold > 0.0 && sweep.threshold <= 1.0)) throw ConfigError("sweep.threshold must lie in (0, 1]");
    if (cool.ancilla < 0) throw ConfigError("cool.ancilla must be nonnegative");
    if (output.trace_trials < -1) throw ConfigError("output.trace_trials must be -1 or nonnegative");
    if (output.checkpoints_per_decade < 1) throw ConfigError("output.checkpoints_per_decade must be at least 1");
    if (verify.samples < 1000) throw ConfigError("verify.samples must be at least 1000");
    if (verify.steps < 1 || verify.pairs < 1 || verify.trials < 1) {
        throw ConfigError("verify.steps, verify.pairs and verify.trials must be positive");
    }
    if (!(verify.epsilon > 0.0)) throw ConfigError("verify.epsilon must be positive");
    try {
        run.gradient.validate();
        strategy.design.validate();
    } catch (const InvalidInput &e) {
        throw ConfigError(e.what());
    }
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["name"] = name;
    j["seed"] = seed;
    j["trials"] = trials;
    j["hamiltonian"]["graph"] = hamiltonian.graph;
    j["hamiltonian"]["target"] = hamiltonian.target ? ordered_json(*hamiltonian.target) : ordered_json(nullptr);
    j["strategy"]["kind"] = raqprep::to_string(strategy.kind);
    j["strategy"]["generator"] = strategy.generator ? ordered_json(*strategy.generator) : ordered_json(nullptr);
    j["strategy"]["design"] = raqprep::to_string(strategy.design.flavor);
    j["strategy"]["layers"] = strategy.design.layers;
    j["strategy"]["pool_size"] = strategy.pool_size;
    j["run"]["max_steps"] = run.max_steps;
    j["run"]["gamma"] = run.gamma ? ordered_json(*run.gamma) : ordered_json("auto");
    j["run"]["repeats"] = run.repeats;
    j["run"]["gradient"] = raqprep::to_string(run.gradient.mode);
    j["run"]["shots"] = run.gradient.shots;
    j["run"]["fd_step"] = run.gradient.fd_step;
    j["run"]["initial_state"] = run.initial_state;
    j["run"]["stop"] = raqprep::to_string(run.stop.kind);
    j["run"]["alpha_threshold"] = run.stop.alpha_threshold;
    j["run"]["grad_tol"] = run.stop.grad_tol;
    j["run"]["patience"] = run.stop.patience;
    j["sweep"]["axis"] = raqprep::to_string(sweep.axis);
    ordered_json strategies = ordered_json::array();
    for (StrategyKind k : sweep.strategies) strategies.push_back(raqprep::to_string(k));
    j["sweep"]["strategies"] = strategies;
    j["sweep"]["values"] = sweep.values;
    j["sweep"]["graph_family"] = sweep.graph_family;
    j["sweep"]["threshold"] = sweep.threshold;
    j["sweep"]["metric"] = raqprep::to_string(sweep.metric);
    j["sweep"]["pool_sizes"] = sweep.pool_sizes;
    j["cool"]["ancilla"] = cool.ancilla;
    j["cool"]["target"] = cool.target;
    j["cool"]["initial"] = cool.initial;
    j["cool"]["kick"] = raqprep::to_string(cool.kick);
    j["output"]["format"] = raqprep::to_string(output.format);
    j["output"]["trace_trials"] = output.trace_trials;
    j["output"]["checkpoints_per_decade"] = output.checkpoints_per_decade;
    j["verify"]["samples"] = verify.samples;
    j["verify"]["steps"] = verify.steps;
    j["verify"]["pairs"] = verify.pairs;
    j["verify"]["trials"] = verify.trials;
    j["verify"]["epsilon"] = verify.epsilon;
    return j;
}

std::shared_ptr<const ProblemHamiltonian> build_hamiltonian(const HamiltonianSection &section) {
    if (section.target) {
        return std::make_shared<const ProblemHamiltonian>(projector_hamiltonian(target_from_spec(*section.target)));
    }
    return std::make_shared<const ProblemHamiltonian>(ising_from_graph(graph_from_spec(section.graph)));
}

std::shared_ptr<const ProblemHamiltonian> build_family_hamiltonian(const std::string &family, int n_qubits) {
    if (family == "complete") return build_hamiltonian({"complete:" + std::to_string(n_qubits), std::nullopt});
    if (family.starts_with("regular:")) {
        // regular:<d>:<seed>
        const std::string rest = family.substr(8);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw ConfigError("graph family must be regular:<d>:<seed>");
        return build_hamiltonian({"regular:" + std::to_string(n_qubits) + ":" + rest, std::nullopt});
    }
    throw ConfigError("unknown graph family '" + family + "' (expected complete or regular:<d>:<seed>)");
}

RandomizationStrategy build_strategy(const StrategySection &section, StrategyKind kind, int n_qubits) {
    RandomizationStrategy s;
    s.kind = kind;
    if (section.generator) s.generator = PauliString(*section.generator);
    s.design = section.design;
    if (kind == StrategyKind::pool) {
        s.pool = section.pool_size == 0 ? all_paulis(n_qubits) : weight_graded_pool(n_qubits, section.pool_size);
    }
    s.validate(n_qubits);
    return s;
}

RunConfig build_run_config(const ExperimentConfig &cfg, StrategyKind kind,
                           std::shared_ptr<const ProblemHamiltonian> hamiltonian) {
    RunConfig r;
    const int n = hamiltonian->n_qubits();
    r.hamiltonian = std::move(hamiltonian);
    r.strategy = build_strategy(cfg.strategy, kind, n);
    r.gamma = cfg.run.gamma;
    r.max_steps = cfg.run.max_steps;
    r.stop = cfg.run.stop;
    r.gradient = cfg.run.gradient;
    r.repeats_per_direction = cfg.run.repeats;
    r.seed = cfg.seed;
    r.trials = cfg.trials;
    if (cfg.run.initial_state != "random") r.initial_state = target_from_spec(cfg.run.initial_state);
    r.validate();
    return r;
}

CoolingConfig build_cooling_config(const ExperimentConfig &cfg) {
    CoolingConfig c;
    c.target = target_from_spec(cfg.cool.target);
    const int n = c.target->n_qubits();
    c.n_ancilla = cfg.cool.ancilla;
    c.kick = cfg.cool.kick;
    if (cfg.cool.initial == "target") {
        c.rho0_system = DensityMatrix::from_pure(*c.target);
    } else if (cfg.cool.initial != "mixed") {
        c.rho0_system = DensityMatrix::from_pure(target_from_spec(cfg.cool.initial));
    }
    c.run.strategy = build_strategy(cfg.strategy, cfg.strategy.kind, n + c.n_ancilla);
    c.run.gamma = cfg.run.gamma;
    c.run.max_steps = cfg.run.max_steps;
    c.run.stop = cfg.run.stop;
    c.run.gradient = cfg.run.gradient;
    c.run.repeats_per_direction = cfg.run.repeats;
    c.run.seed = cfg.seed;
    c.run.trials = cfg.trials;
    c.validate();
    return c;
}

}  // namespace raqprep
