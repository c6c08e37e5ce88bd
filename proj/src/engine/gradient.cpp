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

#include "raqprep/engine/gradient.hpp"

#include <algorithm>
#include <cmath>

#include "raqprep/linalg/operations.hpp"

namespace raqprep {

namespace {

void require_match(const StateVector &psi, int n_direction, const ProblemHamiltonian &h_p) {
    if (psi.n_qubits() != n_direction || psi.n_qubits() != h_p.n_qubits()) {
        throw InvalidInput("state, direction and Hamiltonian act on different registers");
    }
}

}  // namespace

std::string to_string(GradientMode mode) {
    switch (mode) {
        case GradientMode::exact:
            return "exact";
        case GradientMode::finite_difference:
            return "finite_difference";
        case GradientMode::shots:
            return "shots";
    }
    return "unknown";
}

GradientMode gradient_mode_from_string(const std::string &name) {
    if (name == "exact") return GradientMode::exact;
    if (name == "finite_difference") return GradientMode::finite_difference;
    if (name == "shots") return GradientMode::shots;
    throw InvalidInput("unknown gradient mode '" + name + "' (exact, finite_difference, shots)");
}

void GradientConfig::validate() const {
    if (!(fd_step > 0.0)) throw InvalidInput("finite-difference step must be positive");
    if (shots < 1) throw InvalidInput("shot count must be at least 1");
}

double gradient_exact(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p) {
    require_match(psi, h_k.n_qubits(), h_p);
    return commutator_expectation(psi, h_k, h_p);
}

double gradient_hilbert_schmidt(const StateVector &psi, const CMatrix &h_k, const ProblemHamiltonian &h_p) {
    if (static_cast<std::size_t>(h_k.rows()) != psi.dim() || psi.n_qubits() != h_p.n_qubits()) {
        throw InvalidInput("state, direction and Hamiltonian act on different registers");
    }
    const CMatrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
    const CMatrix hp = h_p.to_matrix();
    const CMatrix grad = rho * hp - hp * rho;
    const Complex value = (grad.adjoint() * (Complex{0.0, 1.0} * h_k)).trace();
    return value.real();
}

double rotated_cost(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p, double theta) {
    require_match(psi, h_k.n_qubits(), h_p);
    return h_p.expectation(StateVector::evolved(psi.n_qubits(), h_k.rotate(psi.amplitudes(), theta)));
}

double gradient_finite_difference(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p,
                                  double step) {
    if (!(step > 0.0)) throw InvalidInput("finite-difference step must be positive");
    return (rotated_cost(psi, h_k, h_p, step) - rotated_cost(psi, h_k, h_p, -step)) / (2.0 * step);
}

double sample_cost(const StateVector &psi, const ProblemHamiltonian &h_p, int shots, RngStream &rng) {
    if (shots < 1) throw InvalidInput("shot count must be at least 1");
    const MeasurementDistribution dist = h_p.measurement_distribution(psi);
    std::vector<double> cumulative(dist.probabilities.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
        acc += dist.probabilities[i];
        cumulative[i] = acc;
    }
    double total = 0.0;
    for (int s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        total += dist.values[static_cast<std::size_t>(it - cumulative.begin())];
    }
    return total / shots;
}

double gradient_shot_estimate(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p, int shots,
                              RngStream &rng) {
    require_match(psi, h_k.n_qubits(), h_p);
    if (!h_k.is_involutory()) {
        throw InvalidInput("parameter shift needs an involutory generator (H_k^2 = 1)");
    }
    const int n = psi.n_qubits();
    const StateVector plus = StateVector::evolved(n, h_k.rotate(psi.amplitudes(), M_PI / 4));
    const StateVector minus = StateVector::evolved(n, h_k.rotate(psi.amplitudes(), -M_PI / 4));
    return sample_cost(plus, h_p, shots, rng) - sample_cost(minus, h_p, shots, rng);
}

double estimate_gradient(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p,
                         const GradientConfig &cfg, RngStream &shot_rng) {
    switch (cfg.mode) {
        case GradientMode::exact:
            return gradient_exact(psi, h_k, h_p);
        case GradientMode::finite_difference:
            return gradient_finite_difference(psi, h_k, h_p, cfg.fd_step);
        case GradientMode::shots:
            return gradient_shot_estimate(psi, h_k, h_p, cfg.shots, shot_rng);
    }
    throw std::logic_error("unhandled gradient mode");
}

}  // namespace raqprep
