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

#include <span>
#include <vector>

#include "raqprep/hamiltonians/graph.hpp"
#include "raqprep/linalg/pauli_string.hpp"
#include "raqprep/sampling/rng.hpp"

namespace raqprep {

/// All 4^n - 1 non-identity Pauli strings, ordered by ascending weight and
/// then by label with I < X < Y < Z, qubit 0 first.
std::vector<PauliString> all_paulis(int n_qubits);

/// The first `size` elements of `all_paulis(n_qubits)`.
std::vector<PauliString> weight_graded_pool(int n_qubits, std::size_t size);

/// Number of pool elements of weight at most `max_weight`.
std::size_t pool_size_up_to_weight(int n_qubits, int max_weight);

/// Uniform draw from a nonempty pool.
const PauliString &sample_pool(std::span<const PauliString> pool, RngStream &rng);

/// Uniform simple `degree`-regular graph on `n_vertices` vertices by the
/// pairing model, restarting whenever a self-loop or repeated edge appears.
Graph random_regular_graph(int n_vertices, int degree, RngStream &rng);

}  // namespace raqprep
