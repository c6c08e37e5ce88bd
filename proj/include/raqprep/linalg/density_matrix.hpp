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

#include "raqprep/linalg/state_vector.hpp"
#include "raqprep/linalg/types.hpp"

namespace raqprep {

/// Mixed state on `n_qubits` qubits.
///
/// `from_matrix` enforces Hermiticity (1e-10 entrywise), unit trace (1e-10)
/// and positivity (eigenvalues >= -1e-9). `evolved` is the unchecked route
/// used for conjugation by unitaries, which preserves all three.
class DensityMatrix {
   public:
    static constexpr double kHermitianTolerance = 1e-10;
    static constexpr double kTraceTolerance = 1e-10;
    static constexpr double kPositivityTolerance = 1e-9;

    static DensityMatrix from_matrix(int n_qubits, CMatrix matrix);
    static DensityMatrix from_pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(int n_qubits);
    static DensityMatrix evolved(int n_qubits, CMatrix matrix);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dimension_of(n_qubits_); }
    const CMatrix &matrix() const { return matrix_; }

    double trace() const { return matrix_.trace().real(); }
    double purity() const;
    /// Tr(rho A) for Hermitian A.
    double expectation(const CMatrix &a) const;

    /// Fails with InvalidInput naming the first violated invariant.
    void validate() const;

   private:
    DensityMatrix(int n_qubits, CMatrix matrix);

    int n_qubits_;
    CMatrix matrix_;
};

/// a (x) b with `a` on the leading qubits.
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

}  // namespace raqprep
