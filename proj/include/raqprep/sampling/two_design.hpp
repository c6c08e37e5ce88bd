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

#include <string>

#include "raqprep/linalg/dense_operator.hpp"
#include "raqprep/sampling/gate_circuit.hpp"
#include "raqprep/sampling/rng.hpp"

namespace raqprep {

enum class TwoDesignFlavor { clifford, brickwork };

struct TwoDesignConfig {
    TwoDesignFlavor flavor = TwoDesignFlavor::clifford;
    /// Brickwork repetitions; ignored by the Clifford flavor.
    int layers = 1;

    void validate() const;
};

std::string to_string(TwoDesignFlavor flavor);
TwoDesignFlavor two_design_flavor_from_string(const std::string &name);

/// Uniformly random element of the n-qubit Clifford group (up to global
/// phase), as an H/S/CNOT/SWAP/Pauli circuit.
///
/// Built qubit by qubit: draw the images of (X_i, Z_i) as a uniformly
/// random anticommuting pair of Paulis on qubits i..n-1 with uniformly
/// random signs, then synthesize a circuit realizing that pair. The
/// remaining qubits recurse, so the product is uniform over the group.
GateCircuit random_clifford_circuit(int n_qubits, RngStream &rng);

/// `layers` repetitions of [Haar single-qubit unitary on every qubit, then
/// CZ on (0,1), (1,2), ..., (n-2,n-1)].
GateCircuit brickwork_circuit(int n_qubits, int layers, RngStream &rng);

GateCircuit sample_two_design_circuit(int n_qubits, const TwoDesignConfig &cfg, RngStream &rng);

DenseOperator two_design_unitary(int n_qubits, const TwoDesignConfig &cfg, RngStream &rng);

}  // namespace raqprep
