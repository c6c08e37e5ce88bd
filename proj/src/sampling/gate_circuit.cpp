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

#include "raqprep/sampling/gate_circuit.hpp"

#include <cmath>
#include <cstring>

namespace raqprep {

namespace {

constexpr Complex kI{0.0, 1.0};

std::array<Complex, 4> matrix_of(const Gate &g) {
    const double s = M_SQRT1_2;
    switch (g.kind) {
        case GateKind::H:
            return {s, s, s, -s};
        case GateKind::S:
            return {1.0, 0.0, 0.0, kI};
        case GateKind::Sdg:
            return {1.0, 0.0, 0.0, -kI};
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -kI, kI, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::U:
            return g.u;
        default:
            throw std::logic_error("matrix_of called on a two-qubit gate");
    }
}

template <class Mat>
void apply_gate_impl(const Gate &g, int n, Mat &m) {
    const auto d = static_cast<std::uint64_t>(m.rows());
    const std::uint64_t b0 = std::uint64_t{1} << index_bit_of_qubit(n, g.q0);
    switch (g.kind) {
        case GateKind::CNOT: {
            const std::uint64_t bt = std::uint64_t{1} << index_bit_of_qubit(n, g.q1);
            for (std::uint64_t i = 0; i < d; ++i) {
                if ((i & b0) && !(i & bt)) m.row(static_cast<Eigen::Index>(i)).swap(m.row(static_cast<Eigen::Index>(i | bt)));
            }
            return;
        }
        case GateKind::CZ: {
            const std::uint64_t b1 = std::uint64_t{1} << index_bit_of_qubit(n, g.q1);
            for (std::uint64_t i = 0; i < d; ++i) {
                if ((i & b0) && (i & b1)) m.row(static_cast<Eigen::Index>(i)) *= -1.0;
            }
            return;
        }
        case GateKind::SWAP: {
            const std::uint64_t b1 = std::uint64_t{1} << index_bit_of_qubit(n, g.q1);
            for (std::uint64_t i = 0; i < d; ++i) {
                if ((i & b0) && !(i & b1)) m.row(static_cast<Eigen::Index>(i)).swap(m.row(static_cast<Eigen::Index>((i ^ b0) | b1)));
            }
            return;
        }
        default:
            break;
    }
    const auto u = matrix_of(g);
    for (std::uint64_t i = 0; i < d; ++i) {
        if (i & b0) continue;
        const auto lo = static_cast<Eigen::Index>(i);
        const auto hi = static_cast<Eigen::Index>(i | b0);
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const Complex a = m(lo, c);
            const Complex b = m(hi, c);
            m(lo, c) = u[0] * a + u[1] * b;
            m(hi, c) = u[2] * a + u[3] * b;
        }
    }
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

Gate Gate::adjoint() const {
    Gate out = *this;
    switch (kind) {
        case GateKind::S:
            out.kind = GateKind::Sdg;
            break;
        case GateKind::Sdg:
            out.kind = GateKind::S;
            break;
        case GateKind::U:
            out.u = {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
            break;
        default:
            break;  // self-inverse
    }
    return out;
}

void apply_gate(const Gate &g, int n_qubits, CMatrix &m) {
    apply_gate_impl(g, n_qubits, m);
}

void apply_gate(const Gate &g, int n_qubits, CVector &v) {
    apply_gate_impl(g, n_qubits, v);
}

GateCircuit::GateCircuit(int n_qubits) : n_qubits_(n_qubits) {
    require_qubit_count(n_qubits);
}

void GateCircuit::append(Gate g) {
    const bool two = g.kind == GateKind::CNOT || g.kind == GateKind::CZ || g.kind == GateKind::SWAP;
    if (g.q0 < 0 || g.q0 >= n_qubits_ || (two && (g.q1 < 0 || g.q1 >= n_qubits_ || g.q1 == g.q0))) {
        throw InvalidInput("gate addresses a qubit outside the circuit");
    }
    gates_.push_back(g);
}

void GateCircuit::append(const GateCircuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw InvalidInput("cannot concatenate circuits on different registers");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

GateCircuit GateCircuit::adjoint() const {
    GateCircuit out(n_qubits_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->adjoint());
    }
    return out;
}

CVector GateCircuit::apply(const CVector &v) const {
    CVector out = v;
    for (const auto &g : gates_) apply_gate_impl(g, n_qubits_, out);
    return out;
}

CVector GateCircuit::apply_adjoint(const CVector &v) const {
    CVector out = v;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) apply_gate_impl(it->adjoint(), n_qubits_, out);
    return out;
}

CMatrix GateCircuit::apply(const CMatrix &m) const {
    CMatrix out = m;
    for (const auto &g : gates_) apply_gate_impl(g, n_qubits_, out);
    return out;
}

CMatrix GateCircuit::apply_adjoint(const CMatrix &m) const {
    CMatrix out = m;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) apply_gate_impl(it->adjoint(), n_qubits_, out);
    return out;
}

DenseOperator GateCircuit::to_dense() const {
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits_));
    return {n_qubits_, apply(CMatrix(CMatrix::Identity(d, d))), true};
}

std::uint64_t GateCircuit::fingerprint() const {
    std::uint64_t h = 0x84222325CBF29CE4ULL;
    for (const auto &g : gates_) {
        h = mix(h, static_cast<std::uint64_t>(g.kind));
        h = mix(h, static_cast<std::uint64_t>(g.q0 + 1));
        h = mix(h, static_cast<std::uint64_t>(g.q1 + 1));
        if (g.kind == GateKind::U) {
            for (const auto &c : g.u) {
                std::uint64_t re;
                std::uint64_t im;
                const double r = c.real();
                const double i = c.imag();
                std::memcpy(&re, &r, sizeof re);
                std::memcpy(&im, &i, sizeof im);
                h = mix(mix(h, re), im);
            }
        }
    }
    return h;
}

}  // namespace raqprep
