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

#include <string>

#include "raqprep/engine/direction.hpp"
#include "raqprep/hamiltonians/problem_hamiltonian.hpp"
#include "raqprep/linalg/state_vector.hpp"
#include "raqprep/sampling/rng.hpp"

namespace raqprep {

enum class GradientMode { exact, finite_difference, shots };

std::string to_string(GradientMode mode);
GradientMode gradient_mode_from_string(const std::string &name);

struct GradientConfig {
    GradientMode mode = GradientMode::exact;
    /// Central-difference half step.
    double fd_step = 1e-5;
    /// Measurements per cost estimate in shot mode.
    int shots = 1000;

    void validate() const;
};

/// dJ(0)/dtheta = i<psi|[H_k, H_p]|psi>.
double gradient_exact(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p);

/// <grad J, i H_k> with grad J = [|psi><psi|, H_p] and <A, B> = Tr(A^dagger B),
/// evaluated on dense matrices.
double gradient_hilbert_schmidt(const StateVector &psi, const CMatrix &h_k, const ProblemHamiltonian &h_p);

/// J(theta) = <psi|e^{i theta H_k} H_p e^{-i theta H_k}|psi>.
double rotated_cost(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p, double theta);

/// (J(h) - J(-h)) / (2h).
double gradient_finite_difference(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p,
                                  double step = 1e-5);

/// Mean of `shots` simulated projective measurements of H_p on psi.
double sample_cost(const StateVector &psi, const ProblemHamiltonian &h_p, int shots, RngStream &rng);

/// Parameter shift J(pi/4) - J(-pi/4) with each J estimated from `shots`
/// measurements. Requires H_k^2 = 1.
double gradient_shot_estimate(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p, int shots,
                              RngStream &rng);

double estimate_gradient(const StateVector &psi, const Direction &h_k, const ProblemHamiltonian &h_p,
                         const GradientConfig &cfg, RngStream &shot_rng);

}  // namespace raqprep
