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

#include "raqprep/linalg/pauli_string.hpp"
#include "raqprep/linalg/types.hpp"

namespace raqprep {

/// Dense 2^n x 2^n operator. When constructed with `unitary = true` the
/// product M^dagger M is checked against the identity (1e-10, entrywise).
class DenseOperator {
   public:
    static constexpr double kUnitaryTolerance = 1e-10;

    DenseOperator(int n_qubits, CMatrix matrix, bool unitary = false);

    static DenseOperator identity(int n_qubits);
    static DenseOperator hadamard();
    static DenseOperator from_pauli(const PauliString &p);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dimension_of(n_qubits_); }
    const CMatrix &matrix() const { return matrix_; }
    bool is_unitary() const { return unitary_; }

    bool is_hermitian(double tol = 1e-10) const;
    DenseOperator adjoint() const;
    CVector apply(const CVector &v) const { return matrix_ * v; }

   private:
    int n_qubits_;
    CMatrix matrix_;
    bool unitary_;
};

}  // namespace raqprep
