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

#include <optional>
#include <string>
#include <vector>

#include "raqprep/experiments/config.hpp"

namespace raqprep {

/// One row of summary.csv.
struct SummaryRow {
    std::string sweep_name;
    std::string strategy;
    int n = 0;
    int M_checkpoint = 0;
    std::optional<int> pool_size;
    double mean_alpha = 0.0;
    double stderr_alpha = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
};

/// One row of difference.csv: paired comparison of two strategies.
struct DifferenceRow {
    std::string sweep_name;
    std::string strategy_a;
    std::string strategy_b;
    int n = 0;
    int M_checkpoint = 0;
    double mean_alpha_a = 0.0;
    double mean_alpha_b = 0.0;
    /// |mean_alpha_a - mean_alpha_b|.
    double difference = 0.0;
    /// Standard error of the per-trial paired difference.
    double stderr_difference = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
};

/// One row of scaling.csv: smallest resource reaching the threshold at n.
struct ScalingRow {
    std::string sweep_name;
    std::string strategy;
    int n = 0;
    std::string metric;
    /// steps: mean first-passage step over trials that reached the
    /// threshold; pool_size: smallest candidate pool whose mean alpha at
    /// max_steps exceeds it (0 when none does).
    double value = 0.0;
    double stderr_value = 0.0;
    int reached = 0;
    int trials = 0;
    double threshold = 0.0;
    std::uint64_t seed = 0;
};

/// Step records to write to trace.jsonl, tagged with their sweep point.
struct TraceBlock {
    std::string strategy;
    int n = 0;
    std::optional<int> pool_size;
    std::vector<StepRecord> records;
};

struct ExperimentResult {
    std::vector<SummaryRow> summary;
    std::vector<DifferenceRow> difference;
    std::vector<ScalingRow> scaling;
    std::vector<TraceBlock> traces;
};

/// 1 = M_0 < M_1 < ... ending at max_steps, about `per_decade` per factor of 10.
std::vector<int> log_checkpoints(int max_steps, int per_decade);

/// Figure of merit after min(M, steps) steps.
double alpha_at(const RunTrace &trace, int M);

/// First step index k with figure of merit above `threshold`, if any.
std::optional<int> first_passage(const RunTrace &trace, double threshold);

/// Trials of `run` with step records kept for the first `keep_records`
/// trials (-1 keeps all), in trial order.
std::vector<RunTrace> run_recorded_trials(const RunConfig &run, int keep_records, int parallel);

/// `run` subcommand: cfg.strategy on cfg.hamiltonian.
ExperimentResult run_single(const ExperimentConfig &cfg, int parallel);

/// `sweep` subcommand, dispatched on cfg.sweep.axis.
ExperimentResult run_sweep(const ExperimentConfig &cfg, int parallel);

/// `cool` subcommand; mean_alpha holds the mean target fidelity.
ExperimentResult run_cool(const ExperimentConfig &cfg, int parallel);

}  // namespace raqprep
