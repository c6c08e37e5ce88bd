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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace raqprep {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Largest register the dense backend accepts (a 4096 x 4096 operator).
inline constexpr int kMaxQubits = 12;

/// Raised when a caller hands an operation input that violates its contract.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline std::size_t dimension_of(int n_qubits) {
    return std::size_t{1} << n_qubits;
}

/// Qubit 0 is the leftmost tensor factor, so it owns the most significant
/// bit of a basis index.
inline int index_bit_of_qubit(int n_qubits, int qubit) {
    return n_qubits - 1 - qubit;
}

inline void require_qubit_count(int n_qubits, int cap = kMaxQubits) {
    if (n_qubits < 1 || n_qubits > cap) {
        throw InvalidInput("qubit count " + std::to_string(n_qubits) + " outside [1, " + std::to_string(cap) + "]");
    }
}

/// <a|b>, summed in index order so the result is reproducible bit for bit.
inline Complex inner(const CVector &a, const CVector &b) {
    double re = 0.0;
    double im = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double ar = a[i].real();
        const double ai = a[i].imag();
        const double br = b[i].real();
        const double bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

}  // namespace raqprep
