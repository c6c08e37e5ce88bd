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

#include "raqprep/experiments/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "raqprep/sampling/pool.hpp"

namespace raqprep {

namespace {

struct Stats {
    double mean;
    double standard_error;
};

Stats stats(const std::vector<double> &xs) {
    if (xs.empty()) return {0.0, 0.0};
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double n = static_cast<double>(xs.size());
    const double mean = sum / n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

std::optional<int> pool_size_of(const RunConfig &run) {
    if (run.strategy.kind != StrategyKind::pool) return std::nullopt;
    return static_cast<int>(run.strategy.pool.size());
}

std::vector<int> checkpoints_for(const ExperimentConfig &cfg) {
    if (!cfg.sweep.values.empty() && cfg.sweep.axis == SweepAxis::steps) {
        if (cfg.sweep.values.back() > cfg.run.max_steps) {
            throw ConfigError("sweep.values exceed run.max_steps");
        }
        return cfg.sweep.values;
    }
    return log_checkpoints(cfg.run.max_steps, cfg.output.checkpoints_per_decade);
}

void append_summary(ExperimentResult &out, const ExperimentConfig &cfg, const RunConfig &run,
                    const std::vector<RunTrace> &traces, const std::vector<int> &checkpoints) {
    for (int m : checkpoints) {
        std::vector<double> alphas;
        alphas.reserve(traces.size());
        for (const auto &t : traces) alphas.push_back(alpha_at(t, m));
        const Stats s = stats(alphas);
        out.summary.push_back({cfg.name, to_string(run.strategy.kind), run.n_qubits(), m, pool_size_of(run), s.mean,
                               s.standard_error, static_cast<int>(traces.size()), cfg.seed});
    }
}

void append_traces(ExperimentResult &out, const RunConfig &run, std::vector<RunTrace> &traces) {
    TraceBlock block{to_string(run.strategy.kind), run.n_qubits(), pool_size_of(run), {}};
    for (auto &t : traces) {
        for (auto &r : t.records) block.records.push_back(std::move(r));
        t.records.clear();
    }
    if (!block.records.empty()) out.traces.push_back(std::move(block));
}

int trace_limit(const ExperimentConfig &cfg) {
    return cfg.output.format == OutputFormat::csv ? 0 : cfg.output.trace_trials;
}

ExperimentResult sweep_steps(const ExperimentConfig &cfg, int parallel) {
    ExperimentResult out;
    const auto hp = build_hamiltonian(cfg.hamiltonian);
    const std::vector<int> checkpoints = checkpoints_for(cfg);
    std::vector<std::vector<RunTrace>> all;
    for (StrategyKind kind : cfg.sweep.strategies) {
        const RunConfig run = build_run_config(cfg, kind, hp);
        all.push_back(run_recorded_trials(run, trace_limit(cfg), parallel));
        append_summary(out, cfg, run, all.back(), checkpoints);
        append_traces(out, run, all.back());
    }
    // Paired differences: trial i shares its initial state and stream seed.
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            for (int m : checkpoints) {
                std::vector<double> xa, xb, diff;
                for (std::size_t t = 0; t < all[a].size(); ++t) {
                    xa.push_back(alpha_at(all[a][t], m));
                    xb.push_back(alpha_at(all[b][t], m));
                    diff.push_back(xa.back() - xb.back());
                }
                const Stats sa = stats(xa), sb = stats(xb), sd = stats(diff);
                out.difference.push_back({cfg.name, to_string(cfg.sweep.strategies[a]),
                                          to_string(cfg.sweep.strategies[b]), hp->n_qubits(), m, sa.mean, sb.mean,
                                          std::abs(sa.mean - sb.mean), sd.standard_error, cfg.trials, cfg.seed});
            }
        }
    }
    return out;
}

ExperimentResult sweep_pool_size(const ExperimentConfig &cfg, int parallel) {
    if (cfg.sweep.values.empty()) throw ConfigError("pool_size sweep needs sweep.values");
    ExperimentResult out;
    const auto hp = build_hamiltonian(cfg.hamiltonian);
    const int n = hp->n_qubits();
    const int full = static_cast<int>(all_paulis(n).size());
    for (int size : cfg.sweep.values) {
        if (size > full) {
            throw ConfigError("pool size " + std::to_string(size) + " exceeds the " + std::to_string(full) +
                              " Pauli strings on " + std::to_string(n) + " qubits");
        }
        ExperimentConfig point = cfg;
        point.strategy.pool_size = size;
        const RunConfig run = build_run_config(point, StrategyKind::pool, hp);
        std::vector<RunTrace> traces = run_recorded_trials(run, trace_limit(cfg), parallel);
        append_summary(out, cfg, run, traces, {cfg.run.max_steps});
        append_traces(out, run, traces);
    }
    return out;
}

ExperimentResult sweep_scaling(const ExperimentConfig &cfg, int parallel) {
    if (cfg.sweep.values.empty()) throw ConfigError("n_qubits sweep needs sweep.values");
    if (cfg.strategy.generator) throw ConfigError("n_qubits sweep uses the default generator; drop strategy.generator");
    if (cfg.run.initial_state != "random") throw ConfigError("n_qubits sweep needs run.initial_state: random");
    ExperimentResult out;
    for (int n : cfg.sweep.values) {
        const auto hp = build_family_hamiltonian(cfg.sweep.graph_family, n);
        if (cfg.sweep.metric == ScalingMetric::steps) {
            for (StrategyKind kind : cfg.sweep.strategies) {
                RunConfig run = build_run_config(cfg, kind, hp);
                run.stop.kind = StopKind::alpha_threshold;
                run.stop.alpha_threshold = cfg.sweep.threshold;
                std::vector<RunTrace> traces = run_recorded_trials(run, trace_limit(cfg), parallel);
                std::vector<double> passage;
                for (const auto &t : traces) {
                    if (auto k = first_passage(t, cfg.sweep.threshold)) passage.push_back(*k);
                }
                const Stats s = stats(passage);
                out.scaling.push_back({cfg.name, to_string(kind), n, "steps", s.mean, s.standard_error,
                                       static_cast<int>(passage.size()), cfg.trials, cfg.sweep.threshold, cfg.seed});
                append_traces(out, run, traces);
            }
        } else {
            const int full = static_cast<int>(all_paulis(n).size());
            std::vector<int> sizes;
            for (int s : cfg.sweep.pool_sizes) {
                if (s < full) sizes.push_back(s);
            }
            sizes.push_back(full);
            ScalingRow row{cfg.name, "pool", n, "pool_size", 0.0, 0.0, 0, cfg.trials, cfg.sweep.threshold, cfg.seed};
            for (int size : sizes) {
                ExperimentConfig point = cfg;
                point.strategy.pool_size = size;
                const RunConfig run = build_run_config(point, StrategyKind::pool, hp);
                const std::vector<RunTrace> traces = run_recorded_trials(run, 0, parallel);
                const std::size_t before = out.summary.size();
                append_summary(out, cfg, run, traces, {cfg.run.max_steps});
                if (out.summary[before].mean_alpha > cfg.sweep.threshold) {
                    row.value = size;
                    row.reached = cfg.trials;
                    break;
                }
            }
            out.scaling.push_back(row);
        }
    }
    return out;
}

}  // namespace

std::vector<int> log_checkpoints(int max_steps, int per_decade) {
    if (max_steps < 1 || per_decade < 1) throw InvalidInput("checkpoints need max_steps >= 1 and per_decade >= 1");
    std::vector<int> out;
    for (int i = 0;; ++i) {
        const double m = std::round(std::pow(10.0, static_cast<double>(i) / per_decade));
        if (m >= max_steps) break;
        const int v = static_cast<int>(m);
        if (out.empty() || v > out.back()) out.push_back(v);
    }
    out.push_back(max_steps);
    return out;
}

double alpha_at(const RunTrace &trace, int M) {
    const std::size_t index = std::min<std::size_t>(static_cast<std::size_t>(std::max(M, 0)), trace.J.size() - 1);
    return figure_of_merit(trace.J[index], trace.ground_energy);
}

std::optional<int> first_passage(const RunTrace &trace, double threshold) {
    for (std::size_t k = 0; k < trace.J.size(); ++k) {
        if (figure_of_merit(trace.J[k], trace.ground_energy) > threshold) return static_cast<int>(k);
    }
    return std::nullopt;
}

std::vector<RunTrace> run_recorded_trials(const RunConfig &run, int keep_records, int parallel) {
    run.validate();
    std::vector<RunTrace> out(static_cast<std::size_t>(run.trials));
    parallel_for(out.size(), parallel, [&](std::size_t i) {
        RunConfig local = run;
        local.record_steps = keep_records < 0 || static_cast<int>(i) < keep_records;
        RunTrace t = run_trial(local, i);
        t.final_state.reset();
        out[i] = std::move(t);
    });
    return out;
}

ExperimentResult run_single(const ExperimentConfig &cfg, int parallel) {
    ExperimentResult out;
    const RunConfig run = build_run_config(cfg, cfg.strategy.kind, build_hamiltonian(cfg.hamiltonian));
    std::vector<RunTrace> traces = run_recorded_trials(run, trace_limit(cfg), parallel);
    append_summary(out, cfg, run, traces, log_checkpoints(cfg.run.max_steps, cfg.output.checkpoints_per_decade));
    append_traces(out, run, traces);
    return out;
}

ExperimentResult run_sweep(const ExperimentConfig &cfg, int parallel) {
    switch (cfg.sweep.axis) {
        case SweepAxis::steps:
            return sweep_steps(cfg, parallel);
        case SweepAxis::pool_size:
            return sweep_pool_size(cfg, parallel);
        case SweepAxis::n_qubits:
            return sweep_scaling(cfg, parallel);
    }
    throw std::logic_error("unknown sweep axis");
}

ExperimentResult run_cool(const ExperimentConfig &cfg, int parallel) {
    const CoolingConfig cool = build_cooling_config(cfg);
    std::vector<CoolingTrace> traces(static_cast<std::size_t>(cool.run.trials));
    const int limit = trace_limit(cfg);
    parallel_for(traces.size(), parallel, [&](std::size_t i) {
        CoolingConfig local = cool;
        local.run.record_steps = limit < 0 || static_cast<int>(i) < limit;
        CoolingTrace t = cooling_trial(local, i);
        t.final_state.reset();
        traces[i] = std::move(t);
    });
    std::vector<RunTrace> runs;
    for (auto &t : traces) runs.push_back(std::move(t.trace));
    ExperimentResult out;
    RunConfig shape = cool.resolved_run();
    append_summary(out, cfg, shape, runs, log_checkpoints(cfg.run.max_steps, cfg.output.checkpoints_per_decade));
    for (auto &row : out.summary) row.n = cool.n_system();
    append_traces(out, shape, runs);
    for (auto &block : out.traces) block.n = cool.n_system();
    return out;
}

}  // namespace raqprep
