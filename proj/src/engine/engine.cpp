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

#include "raqprep/engine/engine.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "raqprep/sampling/haar.hpp"

namespace raqprep {

std::string to_string(StopKind kind) {
    switch (kind) {
        case StopKind::none:
            return "none";
        case StopKind::alpha_threshold:
            return "alpha_threshold";
        case StopKind::grad_tol:
            return "grad_tol";
    }
    return "unknown";
}

StopKind stop_kind_from_string(const std::string &name) {
    if (name == "none") return StopKind::none;
    if (name == "alpha_threshold") return StopKind::alpha_threshold;
    if (name == "grad_tol") return StopKind::grad_tol;
    throw InvalidInput("unknown stop rule '" + name + "' (none, alpha_threshold, grad_tol)");
}

int RunConfig::n_qubits() const {
    if (!hamiltonian) throw InvalidInput("run configuration has no Hamiltonian");
    return hamiltonian->n_qubits();
}

double RunConfig::resolved_gamma() const {
    if (gamma) return *gamma;
    return 1.0 / (4.0 * hamiltonian->spectral_norm());
}

void RunConfig::validate() const {
    const int n = n_qubits();
    strategy.validate(n);
    gradient.validate();
    if (gamma && !(*gamma > 0.0)) throw InvalidInput("gamma must be positive");
    if (!gamma && !(hamiltonian->spectral_norm() > 0.0)) throw InvalidInput("auto gamma needs a nonzero Hamiltonian");
    if (max_steps < 1) throw InvalidInput("max_steps must be at least 1");
    if (repeats_per_direction < 1) throw InvalidInput("repeats_per_direction must be at least 1");
    if (trials < 1) throw InvalidInput("trials must be at least 1");
    if (stop.kind == StopKind::grad_tol && (stop.patience < 1 || !(stop.grad_tol >= 0.0))) {
        throw InvalidInput("gradient stop needs patience >= 1 and grad_tol >= 0");
    }
    if (initial_state && initial_state->n_qubits() != n) {
        throw InvalidInput("initial state register does not match the Hamiltonian");
    }
}

std::optional<double> RunTrace::final_alpha() const {
    if (ground_energy == 0.0) return std::nullopt;
    return approximation_ratio(J.back(), ground_energy);
}

double figure_of_merit(double j, double e_min) {
    return e_min == 0.0 ? 1.0 - j : approximation_ratio(j, e_min);
}

StepResult step_along(const StateVector &psi, const Direction &direction, const RunConfig &cfg, RngStream &shot_rng, int k) {
    const ProblemHamiltonian &hp = *cfg.hamiltonian;
    const double gamma = cfg.resolved_gamma();
    StepRecord rec;
    rec.k = k;
    rec.J_before = hp.expectation(psi);
    rec.gradient = estimate_gradient(psi, direction, hp, cfg.gradient, shot_rng);
    rec.theta = -gamma * rec.gradient;
    StateVector next = rec.theta == 0.0 ? psi : StateVector::evolved(psi.n_qubits(), direction.rotate(psi.amplitudes(), rec.theta));
    rec.J_after = hp.expectation(next);
    rec.delta_J = rec.J_before - rec.J_after;
    rec.strategy = cfg.strategy.kind;
    rec.direction = direction.label();
    rec.stream_id = shot_rng.stream_id();
    rec.gradient_mode = cfg.gradient.mode;
    rec.gamma = gamma;
    rec.auto_gamma = cfg.auto_gamma();
    return {std::move(next), std::move(rec)};
}

StepResult step(const StateVector &psi, const RunConfig &cfg, RngStream &rng, int k) {
    const Direction d = cfg.strategy.sample(psi.n_qubits(), rng);
    return step_along(psi, d, cfg, rng, k);
}

RunTrace run_trial(const RunConfig &cfg, std::uint64_t trial) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const ProblemHamiltonian &hp = *cfg.hamiltonian;
    const int n = cfg.n_qubits();
    RngStream root(cfg.seed, trial);
    RngStream state_rng = root.substream(0);
    RngStream direction_rng = root.substream(1);
    RngStream shot_rng = root.substream(2);

    RunTrace trace;
    trace.seed = cfg.seed;
    trace.stream_id = trial;
    trace.strategy = cfg.strategy.kind;
    trace.hamiltonian_norm = hp.spectral_norm();
    trace.ground_energy = hp.ground_energy();

    StateVector psi = cfg.initial_state ? *cfg.initial_state : random_state(n, state_rng);
    trace.J.reserve(static_cast<std::size_t>(cfg.max_steps) + 1);
    trace.gradients.reserve(static_cast<std::size_t>(cfg.max_steps));
    trace.J.push_back(hp.expectation(psi));

    std::optional<Direction> direction;
    int small_gradient_run = 0;
    for (int k = 0; k < cfg.max_steps; ++k) {
        if (k % cfg.repeats_per_direction == 0) direction.emplace(cfg.strategy.sample(n, direction_rng));
        StepResult r = step_along(psi, *direction, cfg, shot_rng, k);
        psi = std::move(r.state);
        trace.J.push_back(r.record.J_after);
        trace.gradients.push_back(r.record.gradient);
        if (cfg.record_circuit) trace.circuit.push_back({r.record.direction, r.record.theta});
        if (cfg.record_steps) trace.records.push_back(std::move(r.record));

        if (cfg.stop.kind == StopKind::alpha_threshold &&
            figure_of_merit(trace.J.back(), trace.ground_energy) >= cfg.stop.alpha_threshold) {
            break;
        }
        if (cfg.stop.kind == StopKind::grad_tol) {
            small_gradient_run = std::abs(trace.gradients.back()) < cfg.stop.grad_tol ? small_gradient_run + 1 : 0;
            if (small_gradient_run >= cfg.stop.patience) break;
        }
    }
    trace.final_state = std::move(psi);
    trace.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return trace;
}

RunTrace run(const RunConfig &cfg) {
    return run_trial(cfg, 0);
}

void parallel_for(std::size_t count, int parallel, const std::function<void(std::size_t)> &task) {
    const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, parallel)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next.store(count);
                }
            }
        });
    }
    for (auto &t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<RunTrace> run_trials(const RunConfig &cfg, int parallel) {
    cfg.validate();
    std::vector<RunTrace> out(static_cast<std::size_t>(cfg.trials));
    parallel_for(out.size(), parallel, [&](std::size_t i) { out[i] = run_trial(cfg, i); });
    return out;
}

}  // namespace raqprep
