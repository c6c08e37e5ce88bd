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

#include "raqprep/dilation/dilation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "raqprep/linalg/operations.hpp"
#include "raqprep/sampling/haar.hpp"

namespace raqprep {

namespace {

std::vector<int> leading_qubits(int count) {
    std::vector<int> out(static_cast<std::size_t>(count));
    for (int q = 0; q < count; ++q) out[static_cast<std::size_t>(q)] = q;
    return out;
}

void require_matching(const DilatedState &state, const StateVector &target, const Direction &h_k) {
    if (target.n_qubits() != state.n_system) throw InvalidInput("target does not match the system register");
    if (h_k.n_qubits() != state.n_total()) throw InvalidInput("direction does not act on the composite register");
}

// Binomial sample of the cost 1 - [outcome projects onto the target].
double sample_mixed_cost(const DensityMatrix &rho, const ProblemHamiltonian &h_p, int shots, RngStream &rng) {
    const double p_success = std::clamp(1.0 - h_p.expectation(rho.matrix()), 0.0, 1.0);
    int misses = 0;
    for (int s = 0; s < shots; ++s) misses += rng.uniform() >= p_success;
    return static_cast<double>(misses) / shots;
}

double estimate_mixed_gradient(const DensityMatrix &rho, const Direction &h_k, const ProblemHamiltonian &h_p,
                               const GradientConfig &g, RngStream &shot_rng) {
    switch (g.mode) {
        case GradientMode::exact:
            return mixed_gradient(rho, h_k, h_p);
        case GradientMode::finite_difference:
            return (rotated_mixed_cost(rho, h_k, h_p, g.fd_step) - rotated_mixed_cost(rho, h_k, h_p, -g.fd_step)) /
                   (2.0 * g.fd_step);
        case GradientMode::shots: {
            if (!h_k.is_involutory()) throw InvalidInput("shot gradients need an involutory direction");
            const double plus = sample_mixed_cost(rotate_density(rho, h_k, M_PI / 4), h_p, g.shots, shot_rng);
            const double minus = sample_mixed_cost(rotate_density(rho, h_k, -M_PI / 4), h_p, g.shots, shot_rng);
            return plus - minus;
        }
    }
    throw std::logic_error("unknown gradient mode");
}

}  // namespace

DilatedState DilatedState::prepare(const DensityMatrix &rho_system, int n_ancilla) {
    if (n_ancilla < 0) throw InvalidInput("ancilla count must be nonnegative");
    const int total = rho_system.n_qubits() + n_ancilla;
    if (total > kMaxDilatedQubits) {
        throw InvalidInput("system + ancilla exceeds " + std::to_string(kMaxDilatedQubits) + " qubits");
    }
    if (n_ancilla == 0) return {rho_system.n_qubits(), 0, rho_system};
    const DensityMatrix ancilla = DensityMatrix::from_pure(StateVector::basis(n_ancilla, 0));
    return {rho_system.n_qubits(), n_ancilla, tensor(rho_system, ancilla)};
}

DensityMatrix DilatedState::system() const {
    if (n_ancilla == 0) return rho;
    return partial_trace(rho, leading_qubits(n_system));
}

double DilatedState::fidelity(const StateVector &target) const {
    if (target.n_qubits() != n_system) throw InvalidInput("target does not match the system register");
    const CVector &t = target.amplitudes();
    return inner(t, system().matrix() * t).real();
}

CMatrix lifted_target_projector(const StateVector &target, int n_ancilla) {
    const CVector &t = target.amplitudes();
    const CMatrix p = t * t.adjoint();
    const auto da = static_cast<Eigen::Index>(dimension_of(n_ancilla));
    CMatrix out = CMatrix::Zero(p.rows() * da, p.cols() * da);
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        for (Eigen::Index j = 0; j < p.cols(); ++j) {
            for (Eigen::Index a = 0; a < da; ++a) out(i * da + a, j * da + a) = p(i, j);
        }
    }
    return out;
}

double cooling_gradient(const DilatedState &state, const StateVector &target, const Direction &h_k) {
    require_matching(state, target, h_k);
    const CMatrix q = lifted_target_projector(target, state.n_ancilla);
    const CMatrix &rho = state.rho.matrix();
    const CMatrix comm = rho * q - q * rho;
    const CMatrix ih = Complex{0.0, 1.0} * h_k.to_matrix();
    return -(comm.adjoint() * ih).trace().real();
}

double mixed_gradient(const DensityMatrix &rho, const Direction &h_k, const ProblemHamiltonian &h_p) {
    if (rho.n_qubits() != h_k.n_qubits() || rho.n_qubits() != h_p.n_qubits()) {
        throw InvalidInput("state, direction and Hamiltonian act on different registers");
    }
    // Tr(rho H_p H) = Tr(H_p (H rho)).
    const CMatrix h_rho = h_k.apply(rho.matrix());
    const CMatrix hp_h_rho = h_p.apply(h_rho);
    return 2.0 * hp_h_rho.trace().imag();
}

DensityMatrix rotate_density(const DensityMatrix &rho, const Direction &h_k, double theta) {
    const CMatrix left = h_k.rotate(rho.matrix(), theta);
    const CMatrix both = h_k.rotate(CMatrix(left.adjoint()), theta).adjoint();
    return DensityMatrix::evolved(rho.n_qubits(), both);
}

double rotated_mixed_cost(const DensityMatrix &rho, const Direction &h_k, const ProblemHamiltonian &h_p, double theta) {
    return h_p.expectation(rotate_density(rho, h_k, theta).matrix());
}

std::string to_string(KickPolicy policy) {
    switch (policy) {
        case KickPolicy::automatic:
            return "auto";
        case KickPolicy::always:
            return "always";
        case KickPolicy::never:
            return "never";
    }
    return "unknown";
}

KickPolicy kick_policy_from_string(const std::string &name) {
    if (name == "auto") return KickPolicy::automatic;
    if (name == "always") return KickPolicy::always;
    if (name == "never") return KickPolicy::never;
    throw InvalidInput("unknown kick policy '" + name + "' (expected auto, always or never)");
}

int CoolingConfig::n_system() const {
    if (!target) throw InvalidInput("cooling needs a target state");
    return target->n_qubits();
}

void CoolingConfig::validate() const {
    const int ns = n_system();
    if (n_ancilla < 0) throw InvalidInput("ancilla count must be nonnegative");
    if (ns + n_ancilla > kMaxDilatedQubits) {
        throw InvalidInput("system + ancilla exceeds " + std::to_string(kMaxDilatedQubits) + " qubits");
    }
    if (run.hamiltonian) throw InvalidInput("cooling derives its Hamiltonian from the target; leave it unset");
    if (rho0_system && rho0_system->n_qubits() != ns) {
        throw InvalidInput("initial system state does not match the target register");
    }
    resolved_run().validate();
}

RunConfig CoolingConfig::resolved_run() const {
    RunConfig out = run;
    out.hamiltonian = std::make_shared<const ProblemHamiltonian>(ProblemHamiltonian::projector(*target, n_ancilla));
    out.initial_state.reset();
    return out;
}

CoolingTrace cooling_trial(const CoolingConfig &cfg, std::uint64_t trial) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const RunConfig run = cfg.resolved_run();
    const ProblemHamiltonian &hp = *run.hamiltonian;
    const int n_sys = cfg.n_system();
    const int n = n_sys + cfg.n_ancilla;
    const StateVector &target = *cfg.target;
    RngStream root(run.seed, trial);
    RngStream kick_rng = root.substream(0);
    RngStream direction_rng = root.substream(1);
    RngStream shot_rng = root.substream(2);

    DilatedState state = DilatedState::prepare(
        cfg.rho0_system ? *cfg.rho0_system : DensityMatrix::maximally_mixed(n_sys), cfg.n_ancilla);

    CoolingTrace out;
    bool kick = cfg.kick == KickPolicy::always;
    if (cfg.kick == KickPolicy::automatic) {
        const CMatrix q = lifted_target_projector(target, cfg.n_ancilla);
        const CMatrix &rho = state.rho.matrix();
        kick = (rho * q - q * rho).norm() < kKickThreshold;
    }
    if (kick) {
        const HaarUnitary u = HaarUnitary::sample(n, kick_rng);
        const CMatrix left = u.apply(state.rho.matrix());
        state.rho = DensityMatrix::evolved(n, u.apply(CMatrix(left.adjoint())).adjoint());
        out.kicked = true;
    }

    RunTrace &trace = out.trace;
    trace.seed = run.seed;
    trace.stream_id = trial;
    trace.strategy = run.strategy.kind;
    trace.hamiltonian_norm = hp.spectral_norm();
    trace.ground_energy = hp.ground_energy();
    const double gamma = run.resolved_gamma();

    auto observe = [&](const DilatedState &s) {
        const DensityMatrix sys = s.system();
        const CVector &t = target.amplitudes();
        out.purity.push_back(sys.purity());
        out.fidelity.push_back(inner(t, sys.matrix() * t).real());
    };
    trace.J.push_back(hp.expectation(state.rho.matrix()));
    observe(state);

    std::optional<Direction> direction;
    int small_gradient_run = 0;
    for (int k = 0; k < run.max_steps; ++k) {
        if (k % run.repeats_per_direction == 0) direction.emplace(run.strategy.sample(n, direction_rng));
        const double g = estimate_mixed_gradient(state.rho, *direction, hp, run.gradient, shot_rng);
        const double theta = -gamma * g;
        const double j_before = trace.J.back();
        state.rho = rotate_density(state.rho, *direction, theta);
        const double j_after = hp.expectation(state.rho.matrix());
        trace.J.push_back(j_after);
        trace.gradients.push_back(g);
        observe(state);
        if (run.record_circuit) trace.circuit.push_back({direction->label(), theta});
        if (run.record_steps) {
            StepRecord rec;
            rec.k = k;
            rec.gradient = g;
            rec.theta = theta;
            rec.J_before = j_before;
            rec.J_after = j_after;
            rec.delta_J = j_before - j_after;
            rec.strategy = run.strategy.kind;
            rec.direction = direction->label();
            rec.stream_id = trial;
            rec.gradient_mode = run.gradient.mode;
            rec.gamma = gamma;
            rec.auto_gamma = run.auto_gamma();
            rec.purity = out.purity.back();
            rec.fidelity = out.fidelity.back();
            trace.records.push_back(std::move(rec));
        }
        if (run.stop.kind == StopKind::alpha_threshold && 1.0 - j_after >= run.stop.alpha_threshold) break;
        if (run.stop.kind == StopKind::grad_tol) {
            small_gradient_run = std::abs(g) < run.stop.grad_tol ? small_gradient_run + 1 : 0;
            if (small_gradient_run >= run.stop.patience) break;
        }
    }
    out.final_state = state.rho;
    trace.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

CoolingTrace cooling_run(const CoolingConfig &cfg) {
    return cooling_trial(cfg, 0);
}

std::vector<CoolingTrace> cooling_trials(const CoolingConfig &cfg, int parallel) {
    cfg.validate();
    std::vector<CoolingTrace> out(static_cast<std::size_t>(cfg.run.trials));
    parallel_for(out.size(), parallel, [&](std::size_t i) { out[i] = cooling_trial(cfg, i); });
    return out;
}

}  // namespace raqprep
