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

#include <algorithm>
#include <cmath>
#include <concepts>
#include <vector>

#include "raqprep/linalg/dense_operator.hpp"
#include "raqprep/linalg/density_matrix.hpp"
#include "raqprep/linalg/pauli_string.hpp"
#include "raqprep/linalg/state_vector.hpp"

namespace raqprep {

/// Anything that acts linearly on amplitude vectors of a fixed register.
template <class Op>
concept StateOperator = requires(const Op &op, const CVector &v) {
    { op.apply(v) } -> std::convertible_to<CVector>;
    { op.n_qubits() } -> std::convertible_to<int>;
};

// Hermiticity is structural for Pauli strings/sums with real coefficients;
// dense matrices are checked. Other operator types opt in by overloading.
inline bool is_hermitian(const PauliString &) { return true; }
inline bool is_hermitian(const PauliSum &) { return true; }
inline bool is_hermitian(const DenseOperator &op) { return op.is_hermitian(); }

template <StateOperator Op>
void require_same_register(const StateVector &state, const Op &op) {
    if (state.n_qubits() != op.n_qubits()) {
        throw InvalidInput("operator acts on " + std::to_string(op.n_qubits()) + " qubits, state has " +
                           std::to_string(state.n_qubits()));
    }
}

template <StateOperator Op>
void require_hermitian(const Op &op) {
    if (!is_hermitian(op)) {
        throw InvalidInput("operator is not Hermitian");
    }
}

/// e^{-i theta p}|state> = cos(theta)|state> - i sin(theta) p|state>.
/// Requires p.coefficient() == 1.
StateVector apply_pauli_rotation(const StateVector &state, const PauliString &p, double theta);

StateVector apply_dense(const StateVector &state, const DenseOperator &u);

/// <psi|H|psi>. The imaginary residue of the raw inner product must stay
/// below 1e-10 and is dropped.
template <StateOperator Op>
double expectation(const StateVector &state, const Op &h) {
    require_same_register(state, h);
    require_hermitian(h);
    const Complex value = inner(state.amplitudes(), h.apply(state.amplitudes()));
    if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real()))) {
        throw InvalidInput("expectation has a non-negligible imaginary part; operator not Hermitian");
    }
    return value.real();
}

/// i<psi|[A,B]|psi> = -2 Im <A psi|B psi> for Hermitian A, B.
template <StateOperator A, StateOperator B>
double commutator_expectation(const StateVector &state, const A &a, const B &b) {
    require_same_register(state, a);
    require_same_register(state, b);
    require_hermitian(a);
    require_hermitian(b);
    const CVector av = a.apply(state.amplitudes());
    const CVector bv = b.apply(state.amplitudes());
    return -2.0 * inner(av, bv).imag();
}

/// i(<psi|AB|psi> - <psi|BA|psi>) evaluated literally; the reference path
/// for commutator_expectation.
template <StateOperator A, StateOperator B>
double commutator_expectation_naive(const StateVector &state, const A &a, const B &b) {
    require_same_register(state, a);
    require_same_register(state, b);
    const CVector &psi = state.amplitudes();
    const Complex ab = inner(psi, a.apply(b.apply(psi)));
    const Complex ba = inner(psi, b.apply(a.apply(psi)));
    return (Complex{0.0, 1.0} * (ab - ba)).real();
}

/// Reduced state on `keep` (ascending qubit order in the result).
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep);

double spectral_norm(const PauliString &p);
/// Largest absolute eigenvalue of a Hermitian matrix.
double spectral_norm(const DenseOperator &h);
double spectral_norm_hermitian(const CMatrix &h);

}  // namespace raqprep
