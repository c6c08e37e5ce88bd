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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "raqprep/engine/engine.hpp"

namespace raqprep {

enum class BoundKind { inequality, identity };
enum class BoundStatus { satisfied, violated, inconclusive };

std::string to_string(BoundKind kind);
std::string to_string(BoundStatus status);

/// Outcome of checking one inequality (lhs >= rhs - tolerance) or identity
/// (|lhs - rhs| <= tolerance).
struct BoundReport {
    std::string name;
    BoundKind kind = BoundKind::inequality;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    BoundStatus status = BoundStatus::inconclusive;
    /// lhs - rhs.
    double margin = 0.0;
    std::size_t sample_count = 0;
    std::string confidence;
    /// Named intermediate quantities (epsilon, C_eps, standard errors, ...).
    std::map<std::string, double> details;

    bool satisfied() const { return status == BoundStatus::satisfied; }
};

/// Fills status and margin from lhs, rhs, tolerance and kind.
BoundReport finalize(BoundReport report);

/// L_f = 4 ||H_p|| ||H||^2.
double lipschitz_constant(const ProblemHamiltonian &h_p, const PauliString &h);

/// Largest sampled slope |J'(x) - J'(y)| / |x - y| over `pairs` uniform
/// pairs in [-pi, pi]^2, where J(theta) rotates psi along h_k. The report
/// checks L_f (lhs) against that slope (rhs).
BoundReport check_lipschitz(const StateVector &psi, const Direction &h_k, const PauliString &generator,
                            const ProblemHamiltonian &h_p, int pairs, RngStream &rng);

/// delta_J >= gradient^2 / (8 ||H_p||), tolerance 1e-10. Only exact-gradient
/// records taken with gamma = 1 / (4 ||H_p||) are accepted.
BoundReport check_step_bound(const StepRecord &record, const ProblemHamiltonian &h_p);

/// Step-bound check over every record of a trace; lhs is the smallest
/// margin, and details["violations"] counts failing steps.
BoundReport check_trace_step_bounds(const RunTrace &trace, const ProblemHamiltonian &h_p);

/// Step-count bound. M is the first step with J_M <= E_min + epsilon; the
/// bound is C_eps / min_k g_k^2 over the steps k < M, with
/// C_eps = 8 ||H_p|| (J_0 - (E_min + epsilon)). lhs = bound, rhs = M.
/// Inconclusive when the trace never reaches epsilon or a gradient before
/// M vanishes.
BoundReport m_upper_bound(const RunTrace &trace, double epsilon);

/// Tr{H^2} / (4 ||H_p||) * Var_psi(H_p) / (4^n - 1). H must be traceless
/// with spectral norm 1.
double two_design_expected_bound(const PauliString &h, const ProblemHamiltonian &h_p, const StateVector &psi);

/// 2 Tr{H^2} Var_psi(H_p) / (d^2 - 1), the second moment of the gradient
/// under a 2-design.
double gradient_second_moment(const PauliString &h, const ProblemHamiltonian &h_p, const StateVector &psi);

struct TwoDesignCheck {
    /// mean delta_J >= bound at one-sided 99% confidence.
    BoundReport expected_improvement;
    /// mean gradient^2 equals the closed form within 3 standard errors.
    BoundReport second_moment;
};

/// Monte Carlo check of both statements with `samples` draws of V from
/// `strategy` (haar or two_design). Sample i uses rng.substream(i).
TwoDesignCheck verify_two_design_bound_mc(const PauliString &h, const ProblemHamiltonian &h_p, const StateVector &psi,
                                          int samples, const RandomizationStrategy &strategy, const RngStream &rng,
                                          int parallel = 1);

/// Exact enumeration: mean over the pool of delta_J(H_k) with
/// theta = -gradient / (4 ||H_p||), against sum g^2 / (8 ||H_p|| |A|).
BoundReport pool_average_bound(std::span<const PauliString> pool, const StateVector &psi, const ProblemHamiltonian &h_p);

/// One-sided 99% normal quantile.
inline constexpr double kZ99 = 2.3263478740408408;

}  // namespace raqprep
