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

#include "raqprep/linalg/pauli_string.hpp"

#include <bit>
#include <cmath>

namespace raqprep {

namespace {

Complex i_power(int k) {
    switch (k & 3) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

}  // namespace

char pauli_char(Pauli p) {
    return "IXYZ"[static_cast<int>(p)];
}

PauliString::PauliString(int n_qubits, std::uint64_t x, std::uint64_t z, double coefficient)
    : n_qubits_(n_qubits), x_mask_(x), z_mask_(z), coefficient_(coefficient) {}

PauliString::PauliString(std::string_view label, double coefficient) : coefficient_(coefficient) {
    n_qubits_ = static_cast<int>(label.size());
    require_qubit_count(n_qubits_, 62);
    for (int q = 0; q < n_qubits_; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << index_bit_of_qubit(n_qubits_, q);
        switch (label[static_cast<std::size_t>(q)]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x_mask_ |= bit;
                break;
            case 'Y':
                x_mask_ |= bit;
                z_mask_ |= bit;
                break;
            case 'Z':
                z_mask_ |= bit;
                break;
            default:
                throw InvalidInput("bad Pauli label '" + std::string(label) + "'");
        }
    }
}

PauliString PauliString::identity(int n_qubits) {
    require_qubit_count(n_qubits, 62);
    return {n_qubits, 0, 0, 1.0};
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
    require_qubit_count(n_qubits, 62);
    if (qubit < 0 || qubit >= n_qubits) {
        throw InvalidInput("qubit index out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << index_bit_of_qubit(n_qubits, qubit);
    const bool x = p == Pauli::X || p == Pauli::Y;
    const bool z = p == Pauli::Z || p == Pauli::Y;
    return {n_qubits, x ? bit : 0, z ? bit : 0, 1.0};
}

PauliString PauliString::from_masks(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, double coefficient) {
    require_qubit_count(n_qubits, 62);
    const std::uint64_t full = (std::uint64_t{1} << n_qubits) - 1;
    if ((x_mask | z_mask) & ~full) {
        throw InvalidInput("Pauli masks exceed the register");
    }
    return {n_qubits, x_mask, z_mask, coefficient};
}

Pauli PauliString::factor(int qubit) const {
    const int b = index_bit_of_qubit(n_qubits_, qubit);
    const bool x = (x_mask_ >> b) & 1;
    const bool z = (z_mask_ >> b) & 1;
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
}

int PauliString::weight() const {
    return std::popcount(x_mask_ | z_mask_);
}

bool PauliString::commutes_with(const PauliString &other) const {
    const int overlap = std::popcount(x_mask_ & other.z_mask_) + std::popcount(z_mask_ & other.x_mask_);
    return (overlap & 1) == 0;
}

std::string PauliString::label() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(n_qubits_));
    for (int q = 0; q < n_qubits_; ++q) {
        out.push_back(pauli_char(factor(q)));
    }
    return out;
}

double PauliString::trace() const {
    return is_identity() ? coefficient_ * static_cast<double>(dim()) : 0.0;
}

double PauliString::spectral_norm() const {
    return std::abs(coefficient_);
}

CVector PauliString::apply(const CVector &v) const {
    if (static_cast<std::size_t>(v.size()) != dim()) {
        throw InvalidInput("Pauli string applied to a vector of the wrong length");
    }
    const Complex base = coefficient_ * i_power(std::popcount(x_mask_ & z_mask_));
    CVector out(v.size());
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(v.size()); ++b) {
        const bool odd = std::popcount(b & z_mask_) & 1;
        const Complex amp = v[static_cast<Eigen::Index>(b)];
        out[static_cast<Eigen::Index>(b ^ x_mask_)] = odd ? -base * amp : base * amp;
    }
    return out;
}

CMatrix PauliString::to_matrix() const {
    const auto d = static_cast<Eigen::Index>(dim());
    CMatrix m = CMatrix::Zero(d, d);
    const Complex base = coefficient_ * i_power(std::popcount(x_mask_ & z_mask_));
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(d); ++b) {
        const bool odd = std::popcount(b & z_mask_) & 1;
        m(static_cast<Eigen::Index>(b ^ x_mask_), static_cast<Eigen::Index>(b)) = odd ? -base : base;
    }
    return m;
}

PauliString PauliString::with_coefficient(double c) const {
    return {n_qubits_, x_mask_, z_mask_, c};
}

PauliProduct multiply(const PauliString &a, const PauliString &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw InvalidInput("Pauli product across registers of different size");
    }
    // Write P = i^{|x&z|} X^x Z^z. Moving Z^{z_a} past X^{x_b} costs (-1)^{|z_a & x_b|}.
    const std::uint64_t x = a.x_mask() ^ b.x_mask();
    const std::uint64_t z = a.z_mask() ^ b.z_mask();
    int k = std::popcount(a.x_mask() & a.z_mask()) + std::popcount(b.x_mask() & b.z_mask()) -
            std::popcount(x & z) + 2 * std::popcount(a.z_mask() & b.x_mask());
    k = ((k % 4) + 4) % 4;
    const Complex phase = a.coefficient() * b.coefficient() * i_power(k);
    return {phase, PauliString::from_masks(a.n_qubits(), x, z, 1.0)};
}

PauliSum::PauliSum(int n_qubits, std::vector<PauliString> terms) : n_qubits_(n_qubits), terms_(std::move(terms)) {
    for (const auto &t : terms_) {
        if (t.n_qubits() != n_qubits_) {
            throw InvalidInput("Pauli sum term on a different register");
        }
    }
}

CVector PauliSum::apply(const CVector &v) const {
    CVector out = CVector::Zero(v.size());
    for (const auto &t : terms_) {
        out += t.apply(v);
    }
    return out;
}

CMatrix PauliSum::to_matrix() const {
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits_));
    CMatrix m = CMatrix::Zero(d, d);
    for (const auto &t : terms_) {
        m += t.to_matrix();
    }
    return m;
}

}  // namespace raqprep
