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

#include "raqprep/engine/engine.hpp"
#include "raqprep/linalg/density_matrix.hpp"

namespace raqprep {

/// Largest system + ancilla register simulated as a density matrix.
inline constexpr int kMaxDilatedQubits = 10;

/// System qubits lead, ancilla qubits follow.
struct DilatedState {
    int n_system;
    int n_ancilla;
    DensityMatrix rho;

    /// rho_system (x) |0...0><0...0|.
    static DilatedState prepare(const DensityMatrix &rho_system, int n_ancilla);

    int n_total() const { return n_system + n_ancilla; }
    DensityMatrix system() const;
    /// <target| rho_S |target>.
    double fidelity(const StateVector &target) const;
};

/// P_T (x) 1_A on the composite.
CMatrix lifted_target_projector(const StateVector &target, int n_ancilla);

/// -<[rho, P_T (x) 1_A], i H_k> with <A, B> = Tr(A^dagger B), evaluated on
/// dense matrices.
double cooling_gradient(const DilatedState &state, const StateVector &target, const Direction &h_k);

/// Closed-system gradient i Tr(rho [H_k, H_p]) = 2 Im Tr(rho H_p H_k) for a
/// mixed state.
double mixed_gradient(const DensityMatrix &rho, const Direction &h_k, const ProblemHamiltonian &h_p);

/// e^{-i theta H} rho e^{i theta H}.
DensityMatrix rotate_density(const DensityMatrix &rho, const Direction &h_k, double theta);

/// Tr(rho H_p) after rotating by theta.
double rotated_mixed_cost(const DensityMatrix &rho, const Direction &h_k, const ProblemHamiltonian &h_p, double theta);

/// Whether to conjugate the initial composite by one Haar unitary before
/// step 0. `automatic` kicks when ||[rho_0, P_T (x) 1_A]||_F < kKickThreshold.
enum class KickPolicy { automatic, always, never };

std::string to_string(KickPolicy policy);
KickPolicy kick_policy_from_string(const std::string &name);

inline constexpr double kKickThreshold = 1e-12;

struct CoolingConfig {
    /// Strategy, step budget, gradient mode, stop rule, seed and trials.
    /// `hamiltonian` is derived from the target and must be left unset;
    /// `initial_state` is unused.
    RunConfig run;
    int n_ancilla = 1;
    /// Maximally mixed when unset.
    std::optional<DensityMatrix> rho0_system;
    std::optional<StateVector> target;
    KickPolicy kick = KickPolicy::automatic;

    int n_system() const;
    /// Throws InvalidInput on the first problem found.
    void validate() const;
    /// The run config with H_p = 1 - P_T (x) 1_A filled in.
    RunConfig resolved_run() const;
};

struct CoolingTrace {
    /// J_k = 1 - fidelity; records carry purity and fidelity.
    RunTrace trace;
    /// Tr[(rho_S)^2] and <target|rho_S|target>, index k = state after k steps.
    std::vector<double> purity;
    std::vector<double> fidelity;
    bool kicked = false;
    std::optional<DensityMatrix> final_state;
};

/// One trial on stream (seed, trial): substream 0 draws the kick, 1 the
/// directions, 2 the shot noise.
CoolingTrace cooling_trial(const CoolingConfig &cfg, std::uint64_t trial);

/// cooling_trial(cfg, 0).
CoolingTrace cooling_run(const CoolingConfig &cfg);

std::vector<CoolingTrace> cooling_trials(const CoolingConfig &cfg, int parallel = 1);

}  // namespace raqprep
