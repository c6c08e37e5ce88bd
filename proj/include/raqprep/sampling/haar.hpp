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

#include <vector>

#include "raqprep/linalg/dense_operator.hpp"
#include "raqprep/linalg/state_vector.hpp"
#include "raqprep/sampling/rng.hpp"

namespace raqprep {

/// Haar-random unitary kept in factored form V = H_0 H_1 ... H_{d-1} D.
///
/// H_j = I - 2 u_j u_j^dagger is the Householder reflection that a QR
/// factorization of a complex Ginibre matrix would produce at column j; by
/// unitary invariance its source column is a fresh Gaussian vector of length
/// d - j, so it is drawn directly. D holds the phases of the diagonal of R,
/// which removes the QR convention bias so V is exactly Haar.
///
/// Sampling and applying the factored form both cost O(d^2).
class HaarUnitary {
   public:
    static HaarUnitary sample(int n_qubits, RngStream &rng);

    int n_qubits() const { return n_qubits_; }
    CVector apply(const CVector &v) const;
    CVector apply_adjoint(const CVector &v) const;
    CMatrix apply(const CMatrix &m) const;
    CMatrix apply_adjoint(const CMatrix &m) const;

    DenseOperator to_dense() const;
    /// Hash of the factorization, used to tag recorded steps.
    std::uint64_t fingerprint() const;

   private:
    HaarUnitary(int n_qubits, CVector reflectors, CVector phases);

    // Reflects rows [j, d) of m by H_j.
    template <typename Block>
    void reflect(Eigen::Index j, Block &&rows) const;

    int n_qubits_;
    // u_0, u_1, ..., u_{d-1} packed back to back; u_j has length d - j.
    CVector reflectors_;
    CVector phases_;
};

DenseOperator haar_unitary(int n_qubits, RngStream &rng);

/// Normalized complex Gaussian vector: a Haar-random pure state.
StateVector random_state(int n_qubits, RngStream &rng);

}  // namespace raqprep
