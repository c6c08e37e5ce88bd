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

#include <memory>
#include <string>
#include <variant>

#include <Eigen/Eigenvalues>

#include "raqprep/linalg/dense_operator.hpp"
#include "raqprep/linalg/pauli_string.hpp"
#include "raqprep/sampling/gate_circuit.hpp"
#include "raqprep/sampling/haar.hpp"

namespace raqprep {

/// One adaptive direction H_k.
///
/// Either a bare Pauli string (pool sampling), a Pauli generator conjugated
/// by a sampled unitary, H_k = V^dagger H V, or an arbitrary Hermitian
/// matrix handled through its eigendecomposition. The conjugated form never
/// builds H_k: it is applied as V^dagger (H (V v)), and the rotation
/// e^{-i theta H_k} as V^dagger e^{-i theta H} V.
class Direction {
   public:
    static Direction pauli(PauliString p);
    static Direction conjugated(std::shared_ptr<const HaarUnitary> v, PauliString generator, std::string tag = "haar");
    static Direction conjugated(std::shared_ptr<const GateCircuit> v, PauliString generator, std::string tag);
    static Direction conjugated(std::shared_ptr<const DenseOperator> v, PauliString generator, std::string tag = "dense");
    /// Slow path for generators that are not Pauli conjugates.
    static Direction hermitian(const DenseOperator &h);

    int n_qubits() const { return n_qubits_; }

    /// H_k v.
    CVector apply(const CVector &v) const;
    CMatrix apply(const CMatrix &m) const;
    /// e^{-i theta H_k} v.
    CVector rotate(const CVector &v, double theta) const;
    CMatrix rotate(const CMatrix &m, double theta) const;

    CMatrix to_matrix() const;
    /// H_k^2 = 1, which the parameter-shift estimator needs.
    bool is_involutory() const;
    std::uint64_t fingerprint() const;
    /// Pauli label for pool draws, `<tag>:<hex fingerprint>` otherwise.
    std::string label() const;

   private:
    using Conjugator = std::variant<std::shared_ptr<const HaarUnitary>, std::shared_ptr<const GateCircuit>,
                                    std::shared_ptr<const DenseOperator>>;
    struct Conjugated {
        Conjugator v;
        PauliString generator;
    };
    struct Spectral {
        Eigen::VectorXd eigenvalues;
        CMatrix eigenvectors;
    };

    template <class T>
    Direction(int n_qubits, T body, std::string tag) : n_qubits_(n_qubits), body_(std::move(body)), tag_(std::move(tag)) {}

    template <class M>
    M to_frame(const M &x) const;
    template <class M>
    M from_frame(const M &x) const;

    int n_qubits_;
    std::variant<PauliString, Conjugated, Spectral> body_;
    std::string tag_;
};

inline bool is_hermitian(const Direction &) { return true; }

}  // namespace raqprep
