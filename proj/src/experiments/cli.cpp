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

#include "raqprep/experiments/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "raqprep/experiments/output.hpp"
#include "raqprep/experiments/verify.hpp"

namespace raqprep {

namespace {

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out = "out";
    std::optional<std::string> format;
    std::optional<int> trials;
    int parallel = 1;
};

void add_common(CLI::App *sub, Options &o) {
    sub->add_option("--config", o.config, "YAML config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "master seed (overrides the config)");
    sub->add_option("--out", o.out, "output directory")->capture_default_str();
    sub->add_option("--format", o.format, "csv, jsonl or both (overrides the config)")
        ->check(CLI::IsMember({"csv", "jsonl", "both"}));
    sub->add_option("--trials", o.trials, "trials per point (overrides the config)")->check(CLI::PositiveNumber);
    sub->add_option("--parallel", o.parallel, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

int resolve_parallel(int requested) {
    const char *env = std::getenv("RAQ_PREP_THREADS");
    if (env == nullptr || *env == '\0') return requested;
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw ConfigError("RAQ_PREP_THREADS must be a positive integer");
    return static_cast<int>(v);
}

ExperimentConfig resolve_config(const Options &o) {
    ExperimentConfig cfg = o.config.empty() ? ExperimentConfig{} : ExperimentConfig::load(o.config);
    if (o.seed) cfg.seed = *o.seed;
    if (o.trials) cfg.trials = *o.trials;
    if (o.format) cfg.output.format = output_format_from_string(*o.format);
    cfg.validate();
    return cfg;
}

void report_written(std::ostream &out, const std::filesystem::path &dir, const std::vector<std::string> &files) {
    for (const auto &f : files) out << "wrote " << (dir / f).string() << '\n';
}

int execute(const std::string &command, const Options &o, std::ostream &out) {
    const ExperimentConfig cfg = resolve_config(o);
    const int parallel = resolve_parallel(o.parallel);
    const std::filesystem::path dir(o.out);

    if (command == "verify") {
        const VerifyResult result = run_verify(cfg, parallel);
        std::filesystem::create_directories(dir);
        {
            std::ofstream f(dir / "verify.json", std::ios::binary);
            if (!f) throw std::runtime_error("cannot write verify.json");
            f << to_json(result).dump(2) << '\n';
        }
        write_manifest(dir, command, cfg.to_json(), cfg.seed, {"verify.json"});
        print_verify_table(out, result);
        return result.passed() ? kExitOk : kExitRuntimeFailure;
    }

    ExperimentResult result;
    if (command == "run") {
        result = run_single(cfg, parallel);
    } else if (command == "sweep") {
        result = run_sweep(cfg, parallel);
    } else {
        result = run_cool(cfg, parallel);
    }
    std::vector<std::string> files = write_result(dir, result, cfg.output.format);
    write_manifest(dir, command, cfg.to_json(), cfg.seed, files);
    files.push_back("manifest.json");
    report_written(out, dir, files);
    return kExitOk;
}

}  // namespace

int cli_run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Randomized adaptive quantum state preparation experiments", "raqprep"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", raqprep_version());
    Options o;
    for (const char *name : {"run", "sweep", "verify", "cool"}) {
        static const std::map<std::string, std::string> help{
            {"run", "run one configuration and write its trace and summary"},
            {"sweep", "run a step, pool-size or qubit-count sweep"},
            {"verify", "check every bound and print a pass/fail table"},
            {"cool", "cool a system from the fully mixed state through ancilla qubits"}};
        add_common(app.add_subcommand(name, help.at(name)), o);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << raqprep_version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitConfigError;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return execute(command, o, out);
    } catch (const InvalidInput &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception &e) {
        err << "runtime failure: " << e.what() << '\n';
        return kExitRuntimeFailure;
    }
}

}  // namespace raqprep
