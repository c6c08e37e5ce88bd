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

#include <Eigen/Dense>

#include "raqprep/hamiltonians/graph.hpp"
#include "raqprep/linalg/state_vector.hpp"
#include "raqprep/sampling/rng.hpp"

namespace raqprep {

enum class HamiltonianForm { ising_diagonal, projector, dense };

std::string to_string(HamiltonianForm form);

/// Outcome distribution of a projective measurement of H_p: value[i] is
/// observed with probability prob[i].
struct MeasurementDistribution {
    std::vector<double> values;
    std::vector<double> probabilities;
};

/// Problem Hamiltonian H_p, the cost operator of J = <psi|H_p|psi>.
///
/// Three storage forms:
///   ising_diagonal  real diagonal in the computational basis;
///   projector       1 - |t><t| (x) 1_A for a system target t and n_ancilla
///                   trailing ancilla qubits (none for a plain target);
///   dense           full Hermitian matrix with its eigendecomposition.
/// Spectral norm, ground energy and ground degeneracy are computed once at
/// construction.
class ProblemHamiltonian {
   public:
    /// Relative tolerance used to group eigenvalues into the ground space.
    static constexpr double kDegeneracyTolerance = 1e-9;

    static ProblemHamiltonian from_diagonal(int n_qubits, Eigen::VectorXd diagonal);
    static ProblemHamiltonian projector(const StateVector &target, int n_ancilla = 0);
    static ProblemHamiltonian dense(int n_qubits, const CMatrix &matrix);

    HamiltonianForm form() const { return form_; }
    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dimension_of(n_qubits_); }

    double spectral_norm() const { return spectral_norm_; }
    double ground_energy() const { return ground_energy_; }
    int ground_degeneracy() const { return ground_degeneracy_; }

    /// Diagonal of the ising form; throws for other forms.
    const Eigen::VectorXd &diagonal() const;
    /// Target of the projector form; throws for other forms.
    const StateVector &target() const;
    int n_ancilla() const { return n_ancilla_; }

    CVector apply(const CVector &v) const;
    CMatrix apply(const CMatrix &m) const;
    CMatrix to_matrix() const;

    double expectation(const StateVector &psi) const;
    /// Tr(rho H_p).
    double expectation(const CMatrix &rho) const;
    double variance(const StateVector &psi) const;

    MeasurementDistribution measurement_distribution(const StateVector &psi) const;

   private:
    ProblemHamiltonian() = default;
    void cache_spectrum(const Eigen::VectorXd &eigenvalues);

    HamiltonianForm form_ = HamiltonianForm::dense;
    int n_qubits_ = 0;
    Eigen::VectorXd diagonal_;
    std::optional<StateVector> target_;
    int n_ancilla_ = 0;
    CMatrix matrix_;
    Eigen::VectorXd eigenvalues_;
    CMatrix eigenvectors_;
    double spectral_norm_ = 0.0;
    double ground_energy_ = 0.0;
    int ground_degeneracy_ = 0;
};

inline bool is_hermitian(const ProblemHamiltonian &) { return true; }

/// H_p = sum over edges of w_uv Z_u Z_v, stored as its diagonal. Spin z_q is
/// +1 when qubit q reads 0 and -1 when it reads 1.
ProblemHamiltonian ising_from_graph(const Graph &g);

/// H_p = 1 - |target><target|.
ProblemHamiltonian projector_hamiltonian(const StateVector &target);

struct GroundEnergy {
    double energy;
    int degeneracy;
};

/// Exact minimum eigenvalue recomputed from scratch: a diagonal scan for the
/// ising form, a full eigendecomposition of the dense matrix otherwise.
GroundEnergy ground_energy_bruteforce(const ProblemHamiltonian &h);

double variance_of(const StateVector &psi, const ProblemHamiltonian &h);

double spectral_norm(const ProblemHamiltonian &h);

/// alpha = J / E_min, unclipped. E_min = 0 is rejected.
double approximation_ratio(double j, double e_min);

/// Graph from a spec string: `complete:<n>`, `regular:<n>:<d>:<seed>`, or a
/// path to an edge-list file.
Graph graph_from_spec(const std::string &spec);

/// Target state from a spec string: `basis:<bits>`, `plus:<n>`, or
/// `random:<n>:<seed>` (Haar-random).
StateVector target_from_spec(const std::string &spec);

}  // namespace raqprep
