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

#include "raqprep/experiments/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "raqprep/experiments/output.hpp"
#include "raqprep/sampling/pool.hpp"

namespace raqprep {

namespace {

std::shared_ptr<const ProblemHamiltonian> ising(const std::string &graph) {
    return build_hamiltonian({graph, std::nullopt});
}

RandomizationStrategy strategy_of(StrategyKind kind, int n, TwoDesignFlavor flavor = TwoDesignFlavor::clifford,
                                  int layers = 1) {
    RandomizationStrategy s;
    s.kind = kind;
    s.design.flavor = flavor;
    s.design.layers = layers;
    if (kind == StrategyKind::pool) s.pool = all_paulis(n);
    return s;
}

BoundReport renamed(BoundReport r, const std::string &name) {
    r.name = name;
    return r;
}

// Aggregates per-case reports into one: lhs counts satisfied cases, rhs
// counts all cases.
BoundReport tally(const std::string &name, const std::vector<BoundReport> &cases, const std::string &confidence) {
    BoundReport r;
    r.name = name;
    r.confidence = confidence;
    int ok = 0, inconclusive = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const auto &c : cases) {
        ok += c.satisfied();
        inconclusive += c.status == BoundStatus::inconclusive;
        worst = std::min(worst, c.margin);
        r.sample_count += c.sample_count;
    }
    r.lhs = ok;
    r.rhs = static_cast<double>(cases.size());
    r.details["cases"] = static_cast<double>(cases.size());
    r.details["inconclusive"] = inconclusive;
    r.details["worst_margin"] = worst;
    return finalize(r);
}

// Mean gradient under `strategy` against zero, within 3 standard errors.
BoundReport first_moment(const PauliString &h, const ProblemHamiltonian &hp, const StateVector &psi, int samples,
                         const RandomizationStrategy &strategy, const RngStream &rng, int parallel) {
    std::vector<double> g(static_cast<std::size_t>(samples));
    RandomizationStrategy s = strategy;
    s.generator = h;
    parallel_for(g.size(), parallel, [&](std::size_t i) {
        RngStream sub = rng.substream(i);
        g[i] = gradient_exact(psi, s.sample(h.n_qubits(), sub), hp);
    });
    double sum = 0.0;
    for (double x : g) sum += x;
    const double mean = sum / samples;
    double ss = 0.0;
    for (double x : g) ss += (x - mean) * (x - mean);
    const double se = std::sqrt(ss / (samples - 1.0) / samples);
    BoundReport r;
    r.kind = BoundKind::identity;
    r.lhs = mean;
    r.rhs = 0.0;
    r.tolerance = std::max(3.0 * se, 1e-12);
    r.sample_count = static_cast<std::size_t>(samples);
    r.confidence = "3 standard errors";
    r.details["standard_error"] = se;
    return finalize(r);
}

}  // namespace

bool VerifyResult::passed() const {
    for (const auto &e : entries) {
        if (!e.diagnostic && !e.report.satisfied()) return false;
    }
    return true;
}

VerifyResult run_verify(const ExperimentConfig &cfg, int parallel) {
    VerifyResult out;
    const VerifySection &v = cfg.verify;
    const RngStream root(cfg.seed, 0);
    auto add = [&](BoundReport r, bool diagnostic = false) { out.entries.push_back({std::move(r), diagnostic}); };
    const auto z = std::make_shared<const ProblemHamiltonian>(ProblemHamiltonian::from_diagonal(1, Eigen::Vector2d(1, -1)));

    // Lipschitz constant and sampled slopes of J'.
    {
        BoundReport c;
        c.name = "lipschitz_constant_Z_X";
        c.kind = BoundKind::identity;
        c.lhs = lipschitz_constant(*z, PauliString("X"));
        c.rhs = 4.0;
        c.confidence = "exact";
        add(finalize(c));
        for (int n = 1; n <= 3; ++n) {
            RngStream rng = root.substream(100 + static_cast<std::uint64_t>(n));
            const ProblemHamiltonian hp = n == 1 ? *z : *ising("complete:" + std::to_string(n));
            const PauliString x0 = PauliString::single(n, 0, Pauli::X);
            const StateVector psi = random_state(n, rng);
            const Direction d = Direction::conjugated(std::make_shared<const HaarUnitary>(HaarUnitary::sample(n, rng)), x0);
            add(renamed(check_lipschitz(psi, d, x0, hp, v.pairs, rng), "lipschitz_slopes_n" + std::to_string(n)));
        }
    }

    // Per-step improvement over exact-mode runs of every strategy.
    {
        std::vector<BoundReport> cases;
        std::uint64_t stream = 0;
        for (int n : {2, 4}) {
            const auto hp = ising("complete:" + std::to_string(n));
            for (StrategyKind kind : {StrategyKind::haar, StrategyKind::two_design, StrategyKind::pool}) {
                RunConfig run;
                run.hamiltonian = hp;
                run.strategy = strategy_of(kind, n);
                run.max_steps = v.steps;
                run.seed = cfg.seed;
                cases.push_back(check_trace_step_bounds(run_trial(run, 200 + stream++), *hp));
            }
        }
        BoundReport r = tally("step_improvement", cases, "exact, every step");
        std::size_t steps = 0;
        for (const auto &c : cases) steps += c.sample_count;
        r.sample_count = steps;
        add(r);
    }

    // Step-count bound on single-edge runs.
    {
        RunConfig run;
        run.hamiltonian = ising("complete:2");
        run.max_steps = 5000;
        run.seed = cfg.seed;
        run.trials = v.trials;
        run.record_steps = false;
        std::vector<BoundReport> cases;
        for (const auto &t : run_trials(run, parallel)) cases.push_back(m_upper_bound(t, v.epsilon));
        BoundReport r = tally("step_count", cases, "exact, per trial");
        r.details["epsilon"] = v.epsilon;
        add(r);
    }

    // 2-design expectation bound and second-moment identity.
    {
        RngStream rng = root.substream(300);
        struct Case {
            std::string label;
            PauliString h;
            ProblemHamiltonian hp;
            StateVector psi;
        };
        std::vector<Case> cases;
        cases.push_back({"n1", PauliString("X"), *z, StateVector::plus(1)});
        cases.push_back({"n2", PauliString("XI"), *ising("complete:2"), random_state(2, rng)});
        std::uint64_t stream = 310;
        for (const auto &c : cases) {
            for (StrategyKind kind : {StrategyKind::haar, StrategyKind::two_design}) {
                const auto check = verify_two_design_bound_mc(c.h, c.hp, c.psi, v.samples, strategy_of(kind, 1),
                                                              root.substream(stream++), parallel);
                add(renamed(check.expected_improvement, check.expected_improvement.name + "_" + c.label));
                add(renamed(check.second_moment, check.second_moment.name + "_" + c.label));
            }
        }
        // Brickwork diagnostics: first and second moments at one and 2n layers.
        for (int n : {2, 3}) {
            const auto hp = ising("complete:" + std::to_string(n));
            const StateVector psi = random_state(n, rng);
            const PauliString x0 = PauliString::single(n, 0, Pauli::X);
            for (int layers : {1, 2 * n}) {
                const RandomizationStrategy s = strategy_of(StrategyKind::two_design, n, TwoDesignFlavor::brickwork, layers);
                const std::string tag = "brickwork_l" + std::to_string(layers) + "_n" + std::to_string(n);
                add(renamed(first_moment(x0, *hp, psi, v.samples, s, root.substream(stream++), parallel),
                            "gradient_first_moment_" + tag),
                    true);
                const auto check = verify_two_design_bound_mc(x0, *hp, psi, v.samples, s, root.substream(stream++), parallel);
                add(renamed(check.second_moment, "gradient_second_moment_" + tag), true);
            }
        }
    }

    // Pool average bound by enumeration.
    {
        const std::vector<PauliString> xyz{PauliString("X"), PauliString("Y"), PauliString("Z")};
        add(renamed(pool_average_bound(xyz, StateVector::plus(1), *z), "pool_average_XYZ"));
        RngStream rng = root.substream(400);
        const auto pool = all_paulis(2);
        const auto hp = ising("complete:2");
        std::vector<BoundReport> cases;
        for (int i = 0; i < 20; ++i) cases.push_back(pool_average_bound(pool, random_state(2, rng), *hp));
        add(tally("pool_average_n2_full", cases, "exact enumeration, 20 random states"));
    }
    return out;
}

void print_verify_table(std::ostream &out, const VerifyResult &result) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-44s %14s %14s %11s  %s\n", "check", "lhs", "rhs", "tolerance", "status");
    out << line;
    for (const auto &e : result.entries) {
        const BoundReport &r = e.report;
        std::string status = r.satisfied() ? "PASS" : (r.status == BoundStatus::inconclusive ? "INCONCLUSIVE" : "FAIL");
        if (e.diagnostic) status = "INFO (" + to_string(r.status) + ")";
        std::snprintf(line, sizeof(line), "%-44s %14.6g %14.6g %11.3g  %s\n", r.name.c_str(), r.lhs, r.rhs, r.tolerance,
                      status.c_str());
        out << line;
    }
    out << (result.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
}

nlohmann::ordered_json to_json(const VerifyResult &result) {
    nlohmann::ordered_json j;
    j["passed"] = result.passed();
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto &e : result.entries) {
        nlohmann::ordered_json r = to_json(e.report);
        r["diagnostic"] = e.diagnostic;
        reports.push_back(r);
    }
    j["reports"] = reports;
    return j;
}

}  // namespace raqprep
