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

#include "raqprep/linalg/density_matrix.hpp"

#include <Eigen/Eigenvalues>

namespace raqprep {

DensityMatrix::DensityMatrix(int n_qubits, CMatrix matrix) : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}

DensityMatrix DensityMatrix::from_matrix(int n_qubits, CMatrix matrix) {
    require_qubit_count(n_qubits);
    DensityMatrix rho(n_qubits, std::move(matrix));
    rho.validate();
    return rho;
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    require_qubit_count(psi.n_qubits());
    return {psi.n_qubits(), psi.amplitudes() * psi.amplitudes().adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    require_qubit_count(n_qubits);
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
    return {n_qubits, CMatrix::Identity(d, d) / static_cast<double>(d)};
}

DensityMatrix DensityMatrix::evolved(int n_qubits, CMatrix matrix) {
    return {n_qubits, std::move(matrix)};
}

void DensityMatrix::validate() const {
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits_));
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw InvalidInput("density matrix has the wrong shape");
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw InvalidInput("density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > kTraceTolerance) {
        throw InvalidInput("density matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kPositivityTolerance) {
        throw InvalidInput("density matrix has a negative eigenvalue");
    }
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return matrix_.squaredNorm();
}

double DensityMatrix::expectation(const CMatrix &a) const {
    return (matrix_.cwiseProduct(a.transpose())).sum().real();
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    const int n = a.n_qubits() + b.n_qubits();
    require_qubit_count(n);
    const auto da = a.matrix().rows();
    const auto db = b.matrix().rows();
    CMatrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
        }
    }
    return DensityMatrix::evolved(n, std::move(out));
}

}  // namespace raqprep
