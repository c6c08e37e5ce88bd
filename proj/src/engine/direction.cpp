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

#include "raqprep/engine/direction.hpp"

#include <cstdio>
#include <cstring>

namespace raqprep {

namespace {

CVector pauli_apply(const PauliString &p, const CVector &v) {
    return p.apply(v);
}

CMatrix pauli_apply(const PauliString &p, const CMatrix &m) {
    CMatrix out(m.rows(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.col(c) = p.apply(m.col(c));
    return out;
}

template <class M>
M pauli_rotate(const PauliString &p, const M &x, double theta) {
    return std::cos(theta) * x + Complex{0.0, -std::sin(theta)} * pauli_apply(p, x);
}

void require_generator(const PauliString &g) {
    if (g.is_identity() || g.coefficient() != 1.0) {
        throw InvalidInput("direction generator must be a non-identity Pauli string with coefficient 1");
    }
}

}  // namespace

Direction Direction::pauli(PauliString p) {
    require_generator(p);
    const int n = p.n_qubits();
    return {n, std::move(p), "pool"};
}

Direction Direction::conjugated(std::shared_ptr<const HaarUnitary> v, PauliString generator, std::string tag) {
    require_generator(generator);
    if (v->n_qubits() != generator.n_qubits()) throw InvalidInput("conjugating unitary and generator differ in size");
    const int n = generator.n_qubits();
    return {n, Conjugated{std::move(v), std::move(generator)}, std::move(tag)};
}

Direction Direction::conjugated(std::shared_ptr<const GateCircuit> v, PauliString generator, std::string tag) {
    require_generator(generator);
    if (v->n_qubits() != generator.n_qubits()) throw InvalidInput("conjugating circuit and generator differ in size");
    const int n = generator.n_qubits();
    return {n, Conjugated{std::move(v), std::move(generator)}, std::move(tag)};
}

Direction Direction::conjugated(std::shared_ptr<const DenseOperator> v, PauliString generator, std::string tag) {
    require_generator(generator);
    if (!v->is_unitary()) throw InvalidInput("conjugating operator must be flagged unitary");
    if (v->n_qubits() != generator.n_qubits()) throw InvalidInput("conjugating unitary and generator differ in size");
    const int n = generator.n_qubits();
    return {n, Conjugated{std::move(v), std::move(generator)}, std::move(tag)};
}

Direction Direction::hermitian(const DenseOperator &h) {
    if (!h.is_hermitian()) {
        throw InvalidInput("direction generator must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (h.matrix() + h.matrix().adjoint()));
    return {h.n_qubits(), Spectral{es.eigenvalues(), es.eigenvectors()}, "hermitian"};
}

template <class M>
M Direction::to_frame(const M &x) const {
    const auto &c = std::get<Conjugated>(body_);
    return std::visit([&](const auto &v) -> M {
        if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, DenseOperator>) {
            return v->matrix() * x;
        } else {
            return v->apply(x);
        }
    }, c.v);
}

template <class M>
M Direction::from_frame(const M &x) const {
    const auto &c = std::get<Conjugated>(body_);
    return std::visit([&](const auto &v) -> M {
        if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, DenseOperator>) {
            return v->matrix().adjoint() * x;
        } else {
            return v->apply_adjoint(x);
        }
    }, c.v);
}

CVector Direction::apply(const CVector &v) const {
    if (const auto *p = std::get_if<PauliString>(&body_)) return p->apply(v);
    if (const auto *c = std::get_if<Conjugated>(&body_)) return from_frame<CVector>(c->generator.apply(to_frame<CVector>(v)));
    const auto &s = std::get<Spectral>(body_);
    return s.eigenvectors * (s.eigenvalues.cast<Complex>().asDiagonal() * (s.eigenvectors.adjoint() * v));
}

CMatrix Direction::apply(const CMatrix &m) const {
    if (const auto *p = std::get_if<PauliString>(&body_)) return pauli_apply(*p, m);
    if (const auto *c = std::get_if<Conjugated>(&body_)) return from_frame<CMatrix>(pauli_apply(c->generator, to_frame<CMatrix>(m)));
    const auto &s = std::get<Spectral>(body_);
    return s.eigenvectors * (s.eigenvalues.cast<Complex>().asDiagonal() * (s.eigenvectors.adjoint() * m));
}

CVector Direction::rotate(const CVector &v, double theta) const {
    if (const auto *p = std::get_if<PauliString>(&body_)) return pauli_rotate(*p, v, theta);
    if (const auto *c = std::get_if<Conjugated>(&body_)) {
        return from_frame<CVector>(pauli_rotate(c->generator, to_frame<CVector>(v), theta));
    }
    const auto &s = std::get<Spectral>(body_);
    CVector phases(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) phases[i] = std::exp(Complex{0.0, -theta * s.eigenvalues[i]});
    return s.eigenvectors * (phases.asDiagonal() * (s.eigenvectors.adjoint() * v));
}

CMatrix Direction::rotate(const CMatrix &m, double theta) const {
    if (const auto *p = std::get_if<PauliString>(&body_)) return pauli_rotate(*p, m, theta);
    if (const auto *c = std::get_if<Conjugated>(&body_)) {
        return from_frame<CMatrix>(pauli_rotate(c->generator, to_frame<CMatrix>(m), theta));
    }
    const auto &s = std::get<Spectral>(body_);
    CVector phases(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) phases[i] = std::exp(Complex{0.0, -theta * s.eigenvalues[i]});
    return s.eigenvectors * (phases.asDiagonal() * (s.eigenvectors.adjoint() * m));
}

CMatrix Direction::to_matrix() const {
    const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits_));
    return apply(CMatrix(CMatrix::Identity(d, d)));
}

bool Direction::is_involutory() const {
    if (!std::holds_alternative<Spectral>(body_)) return true;
    const auto &s = std::get<Spectral>(body_);
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        if (std::abs(std::abs(s.eigenvalues[i]) - 1.0) > 1e-10) return false;
    }
    return true;
}

std::uint64_t Direction::fingerprint() const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001B3ULL;
    };
    if (const auto *p = std::get_if<PauliString>(&body_)) {
        mix(p->x_mask());
        mix(p->z_mask());
    } else if (const auto *c = std::get_if<Conjugated>(&body_)) {
        mix(c->generator.x_mask());
        mix(c->generator.z_mask());
        std::visit([&](const auto &v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, DenseOperator>) {
                const CMatrix &m = v->matrix();
                for (Eigen::Index i = 0; i < m.size(); ++i) {
                    std::uint64_t bits[2];
                    std::memcpy(bits, &m.data()[i], sizeof bits);
                    mix(bits[0]);
                    mix(bits[1]);
                }
            } else {
                mix(v->fingerprint());
            }
        }, c->v);
    } else {
        const auto &s = std::get<Spectral>(body_);
        for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
            std::uint64_t bits;
            std::memcpy(&bits, &s.eigenvalues[i], sizeof bits);
            mix(bits);
        }
    }
    return h;
}

std::string Direction::label() const {
    if (const auto *p = std::get_if<PauliString>(&body_)) return p->label();
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint()));
    return tag_ + ":" + buf;
}

}  // namespace raqprep
