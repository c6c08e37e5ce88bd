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

#include "raqprep/linalg/dense_operator.hpp"

#include <cmath>

namespace raqprep {

DenseOperator::DenseOperator(int n_qubits, CMatrix matrix, bool unitary)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)), unitary_(unitary) {
    require_qubit_count(n_qubits);
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw InvalidInput("operator on " + std::to_string(n_qubits) + " qubits must be " + std::to_string(d) +
                           "x" + std::to_string(d));
    }
    if (unitary_) {
        const CMatrix defect = matrix_.adjoint() * matrix_ - CMatrix::Identity(d, d);
        if (defect.cwiseAbs().maxCoeff() > kUnitaryTolerance) {
            throw InvalidInput("operator flagged unitary fails U^dagger U = I");
        }
    }
}

DenseOperator DenseOperator::identity(int n_qubits) {
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
    return {n_qubits, CMatrix::Identity(d, d), true};
}

DenseOperator DenseOperator::hadamard() {
    CMatrix h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return {1, std::move(h), true};
}

DenseOperator DenseOperator::from_pauli(const PauliString &p) {
    const bool unitary = std::abs(std::abs(p.coefficient()) - 1.0) < 1e-15;
    return {p.n_qubits(), p.to_matrix(), unitary};
}

bool DenseOperator::is_hermitian(double tol) const {
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

DenseOperator DenseOperator::adjoint() const {
    return {n_qubits_, matrix_.adjoint(), false};
}

}  // namespace raqprep
