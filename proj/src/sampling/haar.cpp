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

#include "raqprep/sampling/haar.hpp"

namespace raqprep {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void *data, std::size_t bytes) {
    const auto *p = static_cast<const unsigned char *>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

HaarUnitary::HaarUnitary(int n_qubits, CVector reflectors, CVector phases)
    : n_qubits_(n_qubits), reflectors_(std::move(reflectors)), phases_(std::move(phases)) {}

namespace {

Eigen::Index reflector_offset(Eigen::Index d, Eigen::Index j) {
    return j * d - j * (j - 1) / 2;
}

}  // namespace

HaarUnitary HaarUnitary::sample(int n_qubits, RngStream &rng) {
    require_qubit_count(n_qubits);
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
    CVector reflectors(d * (d + 1) / 2);
    CVector phases(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        auto u = reflectors.segment(reflector_offset(d, j), d - j);
        for (Eigen::Index i = 0; i < u.size(); ++i) u[i] = rng.complex_normal();
        const double norm = u.norm();
        const double mag0 = std::abs(u[0]);
        const Complex phase0 = mag0 > 0.0 ? u[0] / mag0 : Complex{1.0, 0.0};
        // H x = alpha e_0 with alpha = -phase0 |x|; v = x - alpha e_0.
        const Complex alpha = -phase0 * norm;
        u[0] -= alpha;
        const double vnorm = u.norm();
        if (vnorm > 0.0) {
            u /= vnorm;
        }
        phases[j] = -phase0;
    }
    return {n_qubits, std::move(reflectors), std::move(phases)};
}

template <typename Block>
void HaarUnitary::reflect(Eigen::Index j, Block &&rows) const {
    const auto d = phases_.size();
    const auto u = reflectors_.segment(reflector_offset(d, j), d - j);
    const Eigen::RowVectorXcd w = u.adjoint() * rows;
    rows.noalias() -= (2.0 * u) * w;
}

CVector HaarUnitary::apply(const CVector &v) const {
    const auto d = phases_.size();
    CVector out = phases_.cwiseProduct(v);
    for (Eigen::Index j = d - 1; j >= 0; --j) reflect(j, out.bottomRows(d - j));
    return out;
}

CVector HaarUnitary::apply_adjoint(const CVector &v) const {
    const auto d = phases_.size();
    CVector out = v;
    for (Eigen::Index j = 0; j < d; ++j) reflect(j, out.bottomRows(d - j));
    return phases_.conjugate().cwiseProduct(out);
}

CMatrix HaarUnitary::apply(const CMatrix &m) const {
    const auto d = phases_.size();
    CMatrix out = phases_.asDiagonal() * m;
    for (Eigen::Index j = d - 1; j >= 0; --j) reflect(j, out.bottomRows(d - j));
    return out;
}

CMatrix HaarUnitary::apply_adjoint(const CMatrix &m) const {
    const auto d = phases_.size();
    CMatrix out = m;
    for (Eigen::Index j = 0; j < d; ++j) reflect(j, out.bottomRows(d - j));
    return phases_.conjugate().asDiagonal() * out;
}

DenseOperator HaarUnitary::to_dense() const {
    const auto d = phases_.size();
    return {n_qubits_, apply(CMatrix(CMatrix::Identity(d, d))), true};
}

std::uint64_t HaarUnitary::fingerprint() const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    h = fnv1a(h, reflectors_.data(), sizeof(Complex) * static_cast<std::size_t>(reflectors_.size()));
    return fnv1a(h, phases_.data(), sizeof(Complex) * static_cast<std::size_t>(phases_.size()));
}

DenseOperator haar_unitary(int n_qubits, RngStream &rng) {
    return HaarUnitary::sample(n_qubits, rng).to_dense();
}

StateVector random_state(int n_qubits, RngStream &rng) {
    require_qubit_count(n_qubits, 30);
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
    CVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        v[i] = rng.complex_normal();
    }
    return StateVector::normalized(n_qubits, std::move(v));
}

}  // namespace raqprep
