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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "raqprep/dilation/dilation.hpp"
#include "raqprep/engine/engine.hpp"

namespace raqprep {

/// Bad config file, unknown key or invalid value.
class ConfigError : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

enum class SweepAxis { steps, pool_size, n_qubits };
enum class ScalingMetric { steps, pool_size };
enum class OutputFormat { csv, jsonl, both };

std::string to_string(SweepAxis axis);
std::string to_string(ScalingMetric metric);
std::string to_string(OutputFormat format);
OutputFormat output_format_from_string(const std::string &name);

struct HamiltonianSection {
    /// Ising graph spec (complete:n, regular:n:d:seed, or an edge-list path).
    std::string graph = "complete:2";
    /// Projector 1 - |t><t| instead of the Ising form when set.
    std::optional<std::string> target;
};

struct StrategySection {
    StrategyKind kind = StrategyKind::haar;
    /// Pauli label; X on qubit 0 when unset.
    std::optional<std::string> generator;
    TwoDesignConfig design;
    /// Leading elements of the weight-graded pool; 0 keeps all 4^n - 1.
    int pool_size = 0;
};

struct RunSection {
    int max_steps = 1000;
    std::optional<double> gamma;
    int repeats = 1;
    GradientConfig gradient;
    /// random, basis:<bits>, plus:<n> or random:<n>:<seed>.
    std::string initial_state = "random";
    StopConfig stop;
};

struct SweepSection {
    SweepAxis axis = SweepAxis::steps;
    std::vector<StrategyKind> strategies{StrategyKind::haar};
    /// steps: checkpoints (log-spaced up to max_steps when empty);
    /// pool_size: pool sizes; n_qubits: qubit counts.
    std::vector<int> values;
    /// Graph family for the n_qubits axis: complete, or regular:<d>:<seed>.
    std::string graph_family = "complete";
    /// n_qubits axis: alpha to reach.
    double threshold = 0.99;
    ScalingMetric metric = ScalingMetric::steps;
    /// n_qubits axis with the pool_size metric: candidate sizes, ascending.
    std::vector<int> pool_sizes;
};

struct CoolSection {
    int ancilla = 1;
    std::string target = "basis:0";
    /// mixed, target, or any target spec.
    std::string initial = "mixed";
    KickPolicy kick = KickPolicy::automatic;
};

struct OutputSection {
    OutputFormat format = OutputFormat::both;
    /// Trials per run written to trace.jsonl; -1 writes all.
    int trace_trials = -1;
    int checkpoints_per_decade = 4;
};

struct VerifySection {
    int samples = 10000;
    int steps = 500;
    int pairs = 1000;
    int trials = 100;
    double epsilon = 0.01;
};

struct ExperimentConfig {
    std::string name = "run";
    std::uint64_t seed = 0;
    int trials = 1;
    HamiltonianSection hamiltonian;
    StrategySection strategy;
    RunSection run;
    SweepSection sweep;
    CoolSection cool;
    OutputSection output;
    VerifySection verify;

    /// Every key optional; unknown keys raise ConfigError.
    static ExperimentConfig parse(const std::string &yaml_text);
    static ExperimentConfig load(const std::string &path);

    /// Fully resolved echo, suitable for reparsing.
    nlohmann::ordered_json to_json() const;
    void validate() const;
};

std::shared_ptr<const ProblemHamiltonian> build_hamiltonian(const HamiltonianSection &section);

/// Hamiltonian for one point of an n_qubits sweep.
std::shared_ptr<const ProblemHamiltonian> build_family_hamiltonian(const std::string &family, int n_qubits);

RandomizationStrategy build_strategy(const StrategySection &section, StrategyKind kind, int n_qubits);

/// Run settings from the config for one strategy kind on `hamiltonian`.
RunConfig build_run_config(const ExperimentConfig &cfg, StrategyKind kind,
                           std::shared_ptr<const ProblemHamiltonian> hamiltonian);

CoolingConfig build_cooling_config(const ExperimentConfig &cfg);

}  // namespace raqprep
