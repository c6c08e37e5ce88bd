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

#include "raqprep/experiments/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#ifndef RAQPREP_VERSION
#define RAQPREP_VERSION "unknown"
#endif

namespace raqprep {

namespace {

std::ofstream open_output(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

nlohmann::ordered_json number_or_null(double x) {
    return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string raqprep_version() {
    return RAQPREP_VERSION;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return {buf, res.ptr};
}

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows) {
    out << kSummaryHeader << '\n';
    for (const auto &r : rows) {
        out << r.sweep_name << ',' << r.strategy << ',' << r.n << ',' << r.M_checkpoint << ','
            << (r.pool_size ? std::to_string(*r.pool_size) : "") << ',' << format_double(r.mean_alpha) << ','
            << format_double(r.stderr_alpha) << ',' << r.trials << ',' << r.seed << '\n';
    }
}

void write_difference_csv(std::ostream &out, const std::vector<DifferenceRow> &rows) {
    out << kDifferenceHeader << '\n';
    for (const auto &r : rows) {
        out << r.sweep_name << ',' << r.strategy_a << ',' << r.strategy_b << ',' << r.n << ',' << r.M_checkpoint << ','
            << format_double(r.mean_alpha_a) << ',' << format_double(r.mean_alpha_b) << ','
            << format_double(r.difference) << ',' << format_double(r.stderr_difference) << ',' << r.trials << ','
            << r.seed << '\n';
    }
}

void write_scaling_csv(std::ostream &out, const std::vector<ScalingRow> &rows) {
    out << kScalingHeader << '\n';
    for (const auto &r : rows) {
        out << r.sweep_name << ',' << r.strategy << ',' << r.n << ',' << r.metric << ',' << format_double(r.value)
            << ',' << format_double(r.stderr_value) << ',' << r.reached << ',' << r.trials << ','
            << format_double(r.threshold) << ',' << r.seed << '\n';
    }
}

nlohmann::ordered_json step_json(const StepRecord &r, const TraceBlock &block) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["J_before"] = r.J_before;
    j["J_after"] = r.J_after;
    j["gradient"] = r.gradient;
    j["theta"] = r.theta;
    j["strategy"] = to_string(r.strategy);
    j["stream_id"] = r.stream_id;
    j["direction"] = r.direction;
    j["delta_J"] = r.delta_J;
    j["gamma"] = r.gamma;
    j["n"] = block.n;
    if (block.pool_size) j["pool_size"] = *block.pool_size;
    if (r.purity) j["purity"] = *r.purity;
    if (r.fidelity) j["fidelity"] = *r.fidelity;
    return j;
}

void write_trace_jsonl(std::ostream &out, const std::vector<TraceBlock> &blocks) {
    for (const auto &block : blocks) {
        for (const auto &r : block.records) out << step_json(r, block).dump() << '\n';
    }
}

nlohmann::ordered_json to_json(const BoundReport &r) {
    nlohmann::ordered_json j;
    j["bound_name"] = r.name;
    j["kind"] = to_string(r.kind);
    j["lhs"] = number_or_null(r.lhs);
    j["rhs"] = number_or_null(r.rhs);
    j["tolerance"] = number_or_null(r.tolerance);
    j["satisfied"] = r.satisfied();
    j["status"] = to_string(r.status);
    j["margin"] = number_or_null(r.margin);
    j["sample_count"] = r.sample_count;
    j["confidence"] = r.confidence;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto &[k, v] : r.details) details[k] = number_or_null(v);
    j["details"] = details;
    return j;
}

std::vector<std::string> write_result(const std::filesystem::path &dir, const ExperimentResult &result,
                                      OutputFormat format) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    if (format != OutputFormat::jsonl) {
        {
            auto out = open_output(dir / "summary.csv");
            write_summary_csv(out, result.summary);
        }
        written.push_back("summary.csv");
        if (!result.difference.empty()) {
            auto out = open_output(dir / "difference.csv");
            write_difference_csv(out, result.difference);
            written.push_back("difference.csv");
        }
        if (!result.scaling.empty()) {
            auto out = open_output(dir / "scaling.csv");
            write_scaling_csv(out, result.scaling);
            written.push_back("scaling.csv");
        }
    }
    if (format != OutputFormat::csv) {
        auto out = open_output(dir / "trace.jsonl");
        write_trace_jsonl(out, result.traces);
        written.push_back("trace.jsonl");
    }
    return written;
}

void write_manifest(const std::filesystem::path &dir, const std::string &command, const nlohmann::ordered_json &config,
                    std::uint64_t seed, const std::vector<std::string> &outputs) {
    nlohmann::ordered_json m;
    m["tool"] = "raqprep";
    m["version"] = raqprep_version();
    m["command"] = command;
    m["seed"] = seed;
    m["config"] = config;
    m["outputs"] = outputs;
    std::filesystem::create_directories(dir);
    auto out = open_output(dir / "manifest.json");
    out << m.dump(2) << '\n';
}

}  // namespace raqprep
