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

#include "raqprep/bounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace raqprep {

namespace {

// Absolute slack for sample sets whose spread is pure rounding noise.
constexpr double kRoundoffFloor = 1e-12;

struct MeanAndError {
    double mean;
    double standard_error;
};

MeanAndError mean_and_error(const std::vector<double> &xs) {
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, xs.size() > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0};
}

void require_unit_traceless(const PauliString &h) {
    if (h.trace() != 0.0 || std::abs(h.spectral_norm() - 1.0) > 1e-12) {
        throw InvalidInput("generator must be traceless with spectral norm 1");
    }
}

// Exact improvement of one step with the auto learning rate.
double exact_improvement(const StateVector &psi, const Direction &d, const ProblemHamiltonian &h_p, double gradient) {
    const double theta = -gradient / (4.0 * h_p.spectral_norm());
    const StateVector next = StateVector::evolved(psi.n_qubits(), d.rotate(psi.amplitudes(), theta));
    return h_p.expectation(psi) - h_p.expectation(next);
}

}  // namespace

std::string to_string(BoundKind kind) {
    return kind == BoundKind::inequality ? "inequality" : "identity";
}

std::string to_string(BoundStatus status) {
    switch (status) {
        case BoundStatus::satisfied:
            return "satisfied";
        case BoundStatus::violated:
            return "violated";
        case BoundStatus::inconclusive:
            return "inconclusive";
    }
    return "unknown";
}

BoundReport finalize(BoundReport report) {
    report.margin = report.lhs - report.rhs;
    const bool ok = report.kind == BoundKind::inequality ? report.lhs >= report.rhs - report.tolerance
                                                         : std::abs(report.lhs - report.rhs) <= report.tolerance;
    report.status = ok ? BoundStatus::satisfied : BoundStatus::violated;
    return report;
}

double lipschitz_constant(const ProblemHamiltonian &h_p, const PauliString &h) {
    const double nh = h.spectral_norm();
    return 4.0 * h_p.spectral_norm() * nh * nh;
}

BoundReport check_lipschitz(const StateVector &psi, const Direction &h_k, const PauliString &generator,
                            const ProblemHamiltonian &h_p, int pairs, RngStream &rng) {
    if (pairs < 1) throw InvalidInput("need at least one sample pair");
    auto derivative = [&](double theta) {
        const StateVector rotated = StateVector::evolved(psi.n_qubits(), h_k.rotate(psi.amplitudes(), theta));
        return gradient_exact(rotated, h_k, h_p);
    };
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
        const double x = (2.0 * rng.uniform() - 1.0) * M_PI;
        const double y = (2.0 * rng.uniform() - 1.0) * M_PI;
        if (x == y) continue;
        worst = std::max(worst, std::abs(derivative(x) - derivative(y)) / std::abs(x - y));
    }
    BoundReport r;
    r.name = "lipschitz";
    r.lhs = lipschitz_constant(h_p, generator);
    r.rhs = worst;
    r.tolerance = 1e-10;
    r.sample_count = static_cast<std::size_t>(pairs);
    r.confidence = "max over sampled pairs";
    return finalize(r);
}

BoundReport check_step_bound(const StepRecord &record, const ProblemHamiltonian &h_p) {
    if (record.gradient_mode != GradientMode::exact) {
        throw InvalidInput("step bound holds only for exact gradients");
    }
    if (!record.auto_gamma) {
        throw InvalidInput("step bound requires gamma = 1 / (4 ||H_p||)");
    }
    BoundReport r;
    r.name = "step_improvement";
    r.lhs = record.delta_J;
    r.rhs = record.gradient * record.gradient / (8.0 * h_p.spectral_norm());
    r.tolerance = 1e-10;
    r.sample_count = 1;
    r.confidence = "exact";
    r.details["k"] = record.k;
    return finalize(r);
}

BoundReport check_trace_step_bounds(const RunTrace &trace, const ProblemHamiltonian &h_p) {
    BoundReport worst;
    worst.name = "step_improvement";
    worst.tolerance = 1e-10;
    worst.confidence = "exact";
    double min_margin = std::numeric_limits<double>::infinity();
    int violations = 0;
    for (const auto &rec : trace.records) {
        const BoundReport r = check_step_bound(rec, h_p);
        violations += !r.satisfied();
        if (r.margin < min_margin) {
            min_margin = r.margin;
            worst.lhs = r.lhs;
            worst.rhs = r.rhs;
            worst.details["k"] = rec.k;
        }
    }
    worst.sample_count = trace.records.size();
    worst.details["violations"] = violations;
    if (trace.records.empty()) return worst;
    worst = finalize(worst);
    if (violations > 0) worst.status = BoundStatus::violated;
    return worst;
}

BoundReport m_upper_bound(const RunTrace &trace, double epsilon) {
    BoundReport r;
    r.name = "step_count";
    r.confidence = "exact";
    r.tolerance = 0.0;
    r.details["epsilon"] = epsilon;
    const double e_min = trace.ground_energy;
    const double target = e_min + epsilon;
    const double slack = 1e-12 * std::max(1.0, std::abs(target));
    const double c_eps = 8.0 * trace.hamiltonian_norm * (trace.J.front() - target);
    r.details["C_eps"] = c_eps;

    std::size_t m = trace.J.size();
    for (std::size_t k = 0; k < trace.J.size(); ++k) {
        if (trace.J[k] <= target + slack) {
            m = k;
            break;
        }
    }
    if (m == trace.J.size()) {
        r.details["reached"] = 0;
        return r;  // inconclusive
    }
    r.details["reached"] = 1;
    r.rhs = static_cast<double>(m);
    r.sample_count = m;
    if (m == 0) {
        r.lhs = 0.0;
        return finalize(r);
    }
    double min_g2 = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) min_g2 = std::min(min_g2, trace.gradients[k] * trace.gradients[k]);
    r.details["min_gradient_squared"] = min_g2;
    if (!(min_g2 > 0.0)) {
        return r;  // inconclusive: the bound is unbounded
    }
    r.lhs = c_eps / min_g2;
    return finalize(r);
}

double two_design_expected_bound(const PauliString &h, const ProblemHamiltonian &h_p, const StateVector &psi) {
    require_unit_traceless(h);
    if (h.n_qubits() != h_p.n_qubits()) throw InvalidInput("generator and Hamiltonian act on different registers");
    const double d = static_cast<double>(h.dim());
    const double tr_h2 = h.coefficient() * h.coefficient() * d;
    return tr_h2 / (4.0 * h_p.spectral_norm()) * h_p.variance(psi) / (d * d - 1.0);
}

double gradient_second_moment(const PauliString &h, const ProblemHamiltonian &h_p, const StateVector &psi) {
    if (h.n_qubits() != h_p.n_qubits()) throw InvalidInput("generator and Hamiltonian act on different registers");
    const double d = static_cast<double>(h.dim());
    const double tr_h2 = h.coefficient() * h.coefficient() * d;
    return 2.0 * tr_h2 * h_p.variance(psi) / (d * d - 1.0);
}

TwoDesignCheck verify_two_design_bound_mc(const PauliString &h, const ProblemHamiltonian &h_p, const StateVector &psi,
                                          int samples, const RandomizationStrategy &strategy, const RngStream &rng,
                                          int parallel) {
    if (samples < 1000) throw InvalidInput("Monte Carlo bound check needs at least 1000 samples");
    if (strategy.kind == StrategyKind::pool) throw InvalidInput("2-design check needs a haar or two_design strategy");
    require_unit_traceless(h);
    RandomizationStrategy s = strategy;
    s.generator = h;
    s.validate(h.n_qubits());

    std::vector<double> improvement(static_cast<std::size_t>(samples));
    std::vector<double> g2(static_cast<std::size_t>(samples));
    parallel_for(static_cast<std::size_t>(samples), parallel, [&](std::size_t i) {
        RngStream sub = rng.substream(i);
        const Direction d = s.sample(h.n_qubits(), sub);
        const double g = gradient_exact(psi, d, h_p);
        g2[i] = g * g;
        improvement[i] = exact_improvement(psi, d, h_p, g);
    });

    const MeanAndError imp = mean_and_error(improvement);
    const MeanAndError mom = mean_and_error(g2);
    const std::string sampler = strategy.kind == StrategyKind::haar ? "haar" : to_string(strategy.design.flavor);

    TwoDesignCheck out;
    BoundReport &a = out.expected_improvement;
    a.name = "expected_improvement_" + sampler;
    a.kind = BoundKind::inequality;
    a.lhs = imp.mean;
    a.rhs = two_design_expected_bound(h, h_p, psi);
    a.tolerance = std::max(kZ99 * imp.standard_error, kRoundoffFloor);
    a.sample_count = static_cast<std::size_t>(samples);
    a.confidence = "one-sided 99% normal";
    a.details["standard_error"] = imp.standard_error;
    a = finalize(a);

    BoundReport &b = out.second_moment;
    b.name = "gradient_second_moment_" + sampler;
    b.kind = BoundKind::identity;
    b.lhs = mom.mean;
    b.rhs = gradient_second_moment(h, h_p, psi);
    b.tolerance = std::max(3.0 * mom.standard_error, kRoundoffFloor);
    b.sample_count = static_cast<std::size_t>(samples);
    b.confidence = "3 standard errors";
    b.details["standard_error"] = mom.standard_error;
    b = finalize(b);
    return out;
}

BoundReport pool_average_bound(std::span<const PauliString> pool, const StateVector &psi, const ProblemHamiltonian &h_p) {
    if (pool.empty()) throw InvalidInput("pool must be nonempty");
    double improvement = 0.0;
    double g2 = 0.0;
    for (const PauliString &p : pool) {
        const Direction d = Direction::pauli(p);
        const double g = gradient_exact(psi, d, h_p);
        g2 += g * g;
        improvement += exact_improvement(psi, d, h_p, g);
    }
    const double size = static_cast<double>(pool.size());
    BoundReport r;
    r.name = "pool_average";
    r.lhs = improvement / size;
    r.rhs = g2 / (8.0 * h_p.spectral_norm() * size);
    r.tolerance = 1e-10;
    r.sample_count = pool.size();
    r.confidence = "exact enumeration";
    return finalize(r);
}

}  // namespace raqprep
