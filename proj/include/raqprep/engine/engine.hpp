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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "raqprep/engine/direction.hpp"
#include "raqprep/engine/gradient.hpp"
#include "raqprep/engine/strategy.hpp"
#include "raqprep/hamiltonians/problem_hamiltonian.hpp"

namespace raqprep {

enum class StopKind { none, alpha_threshold, grad_tol };

std::string to_string(StopKind kind);
StopKind stop_kind_from_string(const std::string &name);

struct StopConfig {
    StopKind kind = StopKind::none;
    /// Stop once alpha (fidelity 1 - J for E_min = 0) reaches this value.
    double alpha_threshold = 0.99;
    /// Stop after `patience` consecutive steps with |gradient| < grad_tol.
    double grad_tol = 1e-10;
    int patience = 10;
};

struct RunConfig {
    std::shared_ptr<const ProblemHamiltonian> hamiltonian;
    RandomizationStrategy strategy;
    /// Learning rate; unset means 1 / (4 ||H_p||).
    std::optional<double> gamma;
    int max_steps = 1000;
    StopConfig stop;
    GradientConfig gradient;
    /// Consecutive steps that reuse one sampled direction; each counts toward max_steps.
    int repeats_per_direction = 1;
    std::uint64_t seed = 0;
    int trials = 1;
    /// Fixed initial state; a Haar-random state per trial when unset.
    std::optional<StateVector> initial_state;
    bool record_steps = true;
    /// Keep (direction label, theta) for every step.
    bool record_circuit = false;

    int n_qubits() const;
    double resolved_gamma() const;
    bool auto_gamma() const { return !gamma.has_value(); }
    /// Throws InvalidInput on the first problem found.
    void validate() const;
};

struct StepRecord {
    int k = 0;
    double gradient = 0.0;
    double theta = 0.0;
    double J_before = 0.0;
    double J_after = 0.0;
    double delta_J = 0.0;
    StrategyKind strategy = StrategyKind::haar;
    std::string direction;
    std::uint64_t stream_id = 0;
    GradientMode gradient_mode = GradientMode::exact;
    double gamma = 0.0;
    bool auto_gamma = true;
    std::optional<double> purity;
    std::optional<double> fidelity;
};

struct CircuitEntry {
    std::string direction;
    double theta;
};

struct RunTrace {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
    StrategyKind strategy = StrategyKind::haar;
    double hamiltonian_norm = 0.0;
    double ground_energy = 0.0;
    /// J_0, J_1, ..., one entry per executed step plus the initial value.
    std::vector<double> J;
    /// Gradient of every executed step.
    std::vector<double> gradients;
    /// Full per-step records when RunConfig::record_steps is set.
    std::vector<StepRecord> records;
    std::vector<CircuitEntry> circuit;
    std::optional<StateVector> final_state;
    double wall_seconds = 0.0;

    int steps() const { return static_cast<int>(gradients.size()); }
    double final_J() const { return J.back(); }
    /// J / E_min, or nullopt when E_min = 0.
    std::optional<double> final_alpha() const;
    /// 1 - J, meaningful for projector Hamiltonians.
    double final_fidelity() const { return 1.0 - J.back(); }
};

/// Figure of merit used by stopping rules and summaries: alpha = J / E_min,
/// or the fidelity 1 - J when E_min = 0.
double figure_of_merit(double j, double e_min);

struct StepResult {
    StateVector state;
    StepRecord record;
};

/// One adaptive step along a given direction: measure the gradient, set
/// theta = -gamma * gradient, rotate.
StepResult step_along(const StateVector &psi, const Direction &direction, const RunConfig &cfg, RngStream &shot_rng,
                      int k = 0);

/// One adaptive step with a freshly sampled direction. Direction sampling
/// and shot noise both draw from `rng`.
StepResult step(const StateVector &psi, const RunConfig &cfg, RngStream &rng, int k = 0);

/// One trial on stream (cfg.seed, trial). Substream 0 seeds the initial
/// state, 1 the directions, 2 the shot noise, so trials with the same index
/// share their initial state across strategies.
RunTrace run_trial(const RunConfig &cfg, std::uint64_t trial);

/// run_trial(cfg, 0).
RunTrace run(const RunConfig &cfg);

/// cfg.trials independent trials on up to `parallel` threads, returned in
/// trial order.
std::vector<RunTrace> run_trials(const RunConfig &cfg, int parallel = 1);

/// Runs `count` tasks on up to `parallel` threads. Tasks are independent;
/// the first exception is rethrown after all workers stop.
void parallel_for(std::size_t count, int parallel, const std::function<void(std::size_t)> &task);

}  // namespace raqprep
