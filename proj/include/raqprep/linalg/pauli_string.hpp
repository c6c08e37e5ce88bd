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
#include <string_view>
#include <vector>

#include "raqprep/linalg/types.hpp"

namespace raqprep {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Real multiple of a tensor product of single-qubit Paulis.
///
/// Stored as x/z bit masks in basis-index space (qubit q sits at bit
/// n-1-q), so application to a state is one pass over the amplitudes:
///     P|b> = i^{|x&z|} (-1)^{|b&z|} |b ^ x>.
class PauliString {
   public:
    /// Label over {I,X,Y,Z}, qubit 0 first. '_' is accepted as I.
    explicit PauliString(std::string_view label, double coefficient = 1.0);

    static PauliString identity(int n_qubits);
    static PauliString single(int n_qubits, int qubit, Pauli p);
    static PauliString from_masks(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, double coefficient = 1.0);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dimension_of(n_qubits_); }
    double coefficient() const { return coefficient_; }
    std::uint64_t x_mask() const { return x_mask_; }
    std::uint64_t z_mask() const { return z_mask_; }

    Pauli factor(int qubit) const;
    int weight() const;
    bool is_identity() const { return (x_mask_ | z_mask_) == 0; }
    bool commutes_with(const PauliString &other) const;
    std::string label() const;

    double trace() const;
    double spectral_norm() const;

    CVector apply(const CVector &v) const;
    CMatrix to_matrix() const;

    PauliString with_coefficient(double c) const;

    bool operator==(const PauliString &other) const = default;

   private:
    PauliString(int n_qubits, std::uint64_t x, std::uint64_t z, double coefficient);

    int n_qubits_ = 0;
    std::uint64_t x_mask_ = 0;
    std::uint64_t z_mask_ = 0;
    double coefficient_ = 1.0;
};

/// a * b = phase * string, with the coefficients folded into `phase`.
struct PauliProduct {
    Complex phase;
    PauliString string;
};

PauliProduct multiply(const PauliString &a, const PauliString &b);

/// Sum of Pauli strings on a common register.
class PauliSum {
   public:
    PauliSum(int n_qubits, std::vector<PauliString> terms);

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliString> &terms() const { return terms_; }
    CVector apply(const CVector &v) const;
    CMatrix to_matrix() const;

   private:
    int n_qubits_;
    std::vector<PauliString> terms_;
};

}  // namespace raqprep
