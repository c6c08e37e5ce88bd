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

#include <string_view>

#include "raqprep/linalg/types.hpp"

namespace raqprep {

/// Normalized pure state of `n_qubits` qubits.
///
/// The public constructor checks the length and the norm (within 1e-10).
/// Results of unitary evolution are built through `StateVector::evolved`,
/// which trusts the caller and skips the norm check so long runs do not
/// trip on accumulated rounding.
class StateVector {
   public:
    static constexpr double kNormTolerance = 1e-10;

    StateVector(int n_qubits, CVector amplitudes);

    static StateVector basis(int n_qubits, std::uint64_t index);
    /// Computational basis state from a bit label, qubit 0 first: "01" is |0>|1>.
    static StateVector from_bits(std::string_view bits);
    /// |+>^{n}.
    static StateVector plus(int n_qubits);
    /// Rescales `amplitudes` to unit norm; rejects the zero vector.
    static StateVector normalized(int n_qubits, CVector amplitudes);
    static StateVector evolved(int n_qubits, CVector amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const CVector &amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

    double norm() const { return amplitudes_.norm(); }
    /// <this|other>.
    Complex inner(const StateVector &other) const;
    double fidelity_with(const StateVector &other) const { return std::norm(inner(other)); }

   private:
    struct Trusted {};
    StateVector(Trusted, int n_qubits, CVector amplitudes);

    int n_qubits_;
    CVector amplitudes_;
};

}  // namespace raqprep
