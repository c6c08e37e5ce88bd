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

#include <array>
#include <string>
#include <vector>

#include "raqprep/linalg/dense_operator.hpp"

namespace raqprep {

enum class GateKind : std::uint8_t { H, S, Sdg, X, Y, Z, CNOT, CZ, SWAP, U };

/// One gate of a circuit. `U` carries an arbitrary single-qubit unitary in
/// row-major order {u00, u01, u10, u11}.
struct Gate {
    GateKind kind;
    int q0;
    int q1 = -1;
    std::array<Complex, 4> u{};

    Gate adjoint() const;
};

/// Sequence of gates applied left to right (the first gate acts first).
class GateCircuit {
   public:
    explicit GateCircuit(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    void append(Gate g);
    void append(const GateCircuit &other);
    GateCircuit adjoint() const;

    CVector apply(const CVector &v) const;
    CVector apply_adjoint(const CVector &v) const;
    CMatrix apply(const CMatrix &m) const;
    CMatrix apply_adjoint(const CMatrix &m) const;

    DenseOperator to_dense() const;
    std::uint64_t fingerprint() const;

   private:
    int n_qubits_;
    std::vector<Gate> gates_;
};

/// Applies a single gate in place to every column of `m` (a vector is a
/// one-column matrix).
void apply_gate(const Gate &g, int n_qubits, CMatrix &m);
void apply_gate(const Gate &g, int n_qubits, CVector &v);

}  // namespace raqprep
