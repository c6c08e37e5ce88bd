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

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "raqprep/bounds/bounds.hpp"
#include "raqprep/experiments/sweep.hpp"

namespace raqprep {

inline constexpr const char *kSummaryHeader =
    "sweep_name,strategy,n,M_checkpoint,pool_size,mean_alpha,stderr_alpha,trials,seed";
inline constexpr const char *kDifferenceHeader =
    "sweep_name,strategy_a,strategy_b,n,M_checkpoint,mean_alpha_a,mean_alpha_b,difference,stderr_difference,trials,seed";
inline constexpr const char *kScalingHeader =
    "sweep_name,strategy,n,metric,value,stderr_value,reached,trials,threshold,seed";

/// Shortest round-trip decimal form, independent of locale.
std::string format_double(double x);

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows);
void write_difference_csv(std::ostream &out, const std::vector<DifferenceRow> &rows);
void write_scaling_csv(std::ostream &out, const std::vector<ScalingRow> &rows);

/// One JSON object per step: k, J_before, J_after, gradient, theta,
/// strategy, stream_id, then direction, delta_J, gamma, n, pool_size
/// (pool strategies), purity and fidelity (cooling runs).
nlohmann::ordered_json step_json(const StepRecord &record, const TraceBlock &block);
void write_trace_jsonl(std::ostream &out, const std::vector<TraceBlock> &blocks);

nlohmann::ordered_json to_json(const BoundReport &report);

/// Writes every table the result holds under `dir` and returns the file
/// names written, in a fixed order.
std::vector<std::string> write_result(const std::filesystem::path &dir, const ExperimentResult &result,
                                      OutputFormat format);

/// manifest.json: tool, version, command, seed, resolved config, outputs.
void write_manifest(const std::filesystem::path &dir, const std::string &command, const nlohmann::ordered_json &config,
                    std::uint64_t seed, const std::vector<std::string> &outputs);

/// Version string recorded in manifests.
std::string raqprep_version();

}  // namespace raqprep
