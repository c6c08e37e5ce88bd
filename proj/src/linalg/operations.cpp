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

#include "raqprep/linalg/operations.hpp"

#include <set>

#include <Eigen/Eigenvalues>

namespace raqprep {

StateVector apply_pauli_rotation(const StateVector &state, const PauliString &p, double theta) {
    require_same_register(state, p);
    if (p.coefficient() != 1.0) {
        throw InvalidInput("rotation generator must be a Pauli string with coefficient 1");
    }
    const CVector &psi = state.amplitudes();
    CVector out = std::cos(theta) * psi + Complex{0.0, -std::sin(theta)} * p.apply(psi);
    return StateVector::evolved(state.n_qubits(), std::move(out));
}

StateVector apply_dense(const StateVector &state, const DenseOperator &u) {
    require_same_register(state, u);
    if (!u.is_unitary()) {
        throw InvalidInput("apply_dense requires an operator flagged unitary");
    }
    return StateVector::evolved(state.n_qubits(), u.apply(state.amplitudes()));
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep) {
    const int n = rho.n_qubits();
    if (keep.empty()) {
        throw InvalidInput("partial trace needs at least one kept qubit");
    }
    std::set<int> kept(keep.begin(), keep.end());
    if (kept.size() != keep.size() || *kept.begin() < 0 || *kept.rbegin() >= n) {
        throw InvalidInput("kept qubit set has duplicates or out-of-range indices");
    }
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!kept.contains(q)) traced.push_back(q);
    }
    const std::vector<int> kept_sorted(kept.begin(), kept.end());
    const int nk = static_cast<int>(kept_sorted.size());
    const int nt = static_cast<int>(traced.size());

    // Scatter a compact index over the chosen qubits into a full basis index.
    auto scatter = [n](const std::vector<int> &qubits, std::uint64_t compact) {
        std::uint64_t full = 0;
        const int m = static_cast<int>(qubits.size());
        for (int j = 0; j < m; ++j) {
            if ((compact >> (m - 1 - j)) & 1) {
                full |= std::uint64_t{1} << index_bit_of_qubit(n, qubits[static_cast<std::size_t>(j)]);
            }
        }
        return full;
    };

    const std::uint64_t dk = std::uint64_t{1} << nk;
    const std::uint64_t dt = std::uint64_t{1} << nt;
    std::vector<std::uint64_t> kept_index(dk);
    std::vector<std::uint64_t> traced_index(dt);
    for (std::uint64_t i = 0; i < dk; ++i) kept_index[i] = scatter(kept_sorted, i);
    for (std::uint64_t t = 0; t < dt; ++t) traced_index[t] = scatter(traced, t);

    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    const CMatrix &m = rho.matrix();
    for (std::uint64_t i = 0; i < dk; ++i) {
        for (std::uint64_t j = 0; j < dk; ++j) {
            Complex acc{0.0, 0.0};
            for (std::uint64_t t = 0; t < dt; ++t) {
                acc += m(static_cast<Eigen::Index>(kept_index[i] | traced_index[t]),
                         static_cast<Eigen::Index>(kept_index[j] | traced_index[t]));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    }
    return DensityMatrix::evolved(nk, std::move(out));
}

double spectral_norm(const PauliString &p) {
    return p.spectral_norm();
}

double spectral_norm_hermitian(const CMatrix &h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_norm(const DenseOperator &h) {
    if (!h.is_hermitian()) {
        throw InvalidInput("spectral_norm expects a Hermitian operator");
    }
    return spectral_norm_hermitian(h.matrix());
}

}  // namespace raqprep
