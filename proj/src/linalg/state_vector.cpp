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

#include "raqprep/linalg/state_vector.hpp"

#include <cmath>

namespace raqprep {

StateVector::StateVector(int n_qubits, CVector amplitudes) : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    require_qubit_count(n_qubits, 30);
    if (static_cast<std::size_t>(amplitudes_.size()) != dimension_of(n_qubits)) {
        throw InvalidInput("state of " + std::to_string(n_qubits) + " qubits needs " +
                           std::to_string(dimension_of(n_qubits)) + " amplitudes, got " +
                           std::to_string(amplitudes_.size()));
    }
    if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
        throw InvalidInput("state vector is not normalized");
    }
}

StateVector::StateVector(Trusted, int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    require_qubit_count(n_qubits, 30);
    if (index >= dimension_of(n_qubits)) {
        throw InvalidInput("basis index out of range");
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dimension_of(n_qubits)));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return {Trusted{}, n_qubits, std::move(v)};
}

StateVector StateVector::from_bits(std::string_view bits) {
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidInput("basis label must contain only 0 and 1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return basis(static_cast<int>(bits.size()), index);
}

StateVector StateVector::plus(int n_qubits) {
    require_qubit_count(n_qubits, 30);
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
    CVector v = CVector::Constant(d, Complex{1.0 / std::sqrt(static_cast<double>(d)), 0.0});
    return {Trusted{}, n_qubits, std::move(v)};
}

StateVector StateVector::normalized(int n_qubits, CVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw InvalidInput("cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return {n_qubits, std::move(amplitudes)};
}

StateVector StateVector::evolved(int n_qubits, CVector amplitudes) {
    return {Trusted{}, n_qubits, std::move(amplitudes)};
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw InvalidInput("inner product between registers of different size");
    }
    return raqprep::inner(amplitudes_, other.amplitudes_);
}

}  // namespace raqprep
