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

#include "raqprep/sampling/two_design.hpp"

#include <utility>
#include <vector>

#include "raqprep/sampling/haar.hpp"

namespace raqprep {

namespace {

// Unsigned Pauli on a block of qubits in symplectic form; index j is the
// j-th qubit of the block.
struct Symplectic {
    std::vector<std::uint8_t> x;
    std::vector<std::uint8_t> z;

    bool is_identity() const {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] || z[j]) return false;
        }
        return true;
    }

    bool anticommutes(const Symplectic &o) const {
        int acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) acc += (x[j] & o.z[j]) + (z[j] & o.x[j]);
        return acc & 1;
    }

    bool is_single(int j, bool want_x, bool want_z) const {
        for (std::size_t k = 0; k < x.size(); ++k) {
            const bool on = static_cast<int>(k) == j;
            if (x[k] != (on && want_x) || z[k] != (on && want_z)) return false;
        }
        return true;
    }
};

Symplectic random_symplectic(int m, RngStream &rng) {
    Symplectic p{std::vector<std::uint8_t>(static_cast<std::size_t>(m)), std::vector<std::uint8_t>(static_cast<std::size_t>(m))};
    for (int j = 0; j < m; ++j) {
        p.x[static_cast<std::size_t>(j)] = rng.coin();
        p.z[static_cast<std::size_t>(j)] = rng.coin();
    }
    return p;
}

// Tracks a pair of Paulis under Clifford gates on a block starting at
// global qubit `offset`, recording the gates.
class PairReducer {
   public:
    PairReducer(int n_qubits, int offset, Symplectic a, Symplectic b)
        : circuit_(n_qubits), offset_(offset), a_(std::move(a)), b_(std::move(b)) {}

    GateCircuit reduce() {
        make_x_only(a_);
        gather_to_first(a_);
        h(0);  // a = Z_0, b has an X component on qubit 0
        make_x_only(b_);
        gather_to_first(b_);
        h(0);  // a = X_0, b = Z_0
        if (!a_.is_single(0, true, false) || !b_.is_single(0, false, true)) {
            throw std::logic_error("Clifford pair reduction did not reach (X_0, Z_0)");
        }
        return std::move(circuit_);
    }

   private:
    void make_x_only(const Symplectic &target) {
        for (std::size_t j = 0; j < target.x.size(); ++j) {
            if (!target.z[j]) continue;
            if (target.x[j]) {
                s(static_cast<int>(j));
            } else {
                h(static_cast<int>(j));
            }
        }
    }

    void gather_to_first(const Symplectic &target) {
        std::vector<int> support;
        for (std::size_t j = 0; j < target.x.size(); ++j) {
            if (target.x[j]) support.push_back(static_cast<int>(j));
        }
        const int head = support.front();
        for (std::size_t k = 1; k < support.size(); ++k) cnot(head, support[k]);
        if (head != 0) swap(0, head);
    }

    void h(int j) {
        for (auto *p : {&a_, &b_}) std::swap(p->x[idx(j)], p->z[idx(j)]);
        circuit_.append({GateKind::H, offset_ + j});
    }
    void s(int j) {
        for (auto *p : {&a_, &b_}) p->z[idx(j)] ^= p->x[idx(j)];
        circuit_.append({GateKind::S, offset_ + j});
    }
    void cnot(int c, int t) {
        for (auto *p : {&a_, &b_}) {
            p->x[idx(t)] ^= p->x[idx(c)];
            p->z[idx(c)] ^= p->z[idx(t)];
        }
        circuit_.append({GateKind::CNOT, offset_ + c, offset_ + t});
    }
    void swap(int i, int j) {
        for (auto *p : {&a_, &b_}) {
            std::swap(p->x[idx(i)], p->x[idx(j)]);
            std::swap(p->z[idx(i)], p->z[idx(j)]);
        }
        circuit_.append({GateKind::SWAP, offset_ + i, offset_ + j});
    }
    static std::size_t idx(int j) { return static_cast<std::size_t>(j); }

    GateCircuit circuit_;
    int offset_;
    Symplectic a_;
    Symplectic b_;
};

}  // namespace

void TwoDesignConfig::validate() const {
    if (layers < 1) {
        throw InvalidInput("two-design layers must be >= 1");
    }
}

std::string to_string(TwoDesignFlavor flavor) {
    return flavor == TwoDesignFlavor::clifford ? "clifford" : "brickwork";
}

TwoDesignFlavor two_design_flavor_from_string(const std::string &name) {
    if (name == "clifford") return TwoDesignFlavor::clifford;
    if (name == "brickwork") return TwoDesignFlavor::brickwork;
    throw InvalidInput("unknown two-design flavor '" + name + "'");
}

GateCircuit random_clifford_circuit(int n_qubits, RngStream &rng) {
    require_qubit_count(n_qubits);
    // U = U_0 U_1 ... U_{n-1}; U_i = W_i^dagger P_i maps (X_i, Z_i) to the
    // sampled pair. Gates are listed in application order, so U_{n-1} first.
    std::vector<GateCircuit> layers;
    layers.reserve(static_cast<std::size_t>(n_qubits));
    for (int i = 0; i < n_qubits; ++i) {
        const int m = n_qubits - i;
        Symplectic a = random_symplectic(m, rng);
        while (a.is_identity()) a = random_symplectic(m, rng);
        Symplectic b = random_symplectic(m, rng);
        while (!a.anticommutes(b)) b = random_symplectic(m, rng);

        GateCircuit layer(n_qubits);
        const std::size_t sign = rng.uniform_index(4);
        if (sign != 0) {
            static constexpr GateKind kSignFix[] = {GateKind::X, GateKind::X, GateKind::Y, GateKind::Z};
            layer.append({kSignFix[sign], i});
        }
        layer.append(PairReducer(n_qubits, i, std::move(a), std::move(b)).reduce().adjoint());
        layers.push_back(std::move(layer));
    }
    GateCircuit out(n_qubits);
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) out.append(*it);
    return out;
}

GateCircuit brickwork_circuit(int n_qubits, int layers, RngStream &rng) {
    require_qubit_count(n_qubits);
    if (layers < 1) {
        throw InvalidInput("brickwork needs at least one layer");
    }
    GateCircuit out(n_qubits);
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < n_qubits; ++q) {
            const CMatrix u = HaarUnitary::sample(1, rng).to_dense().matrix();
            out.append({GateKind::U, q, -1, {u(0, 0), u(0, 1), u(1, 0), u(1, 1)}});
        }
        for (int q = 0; q + 1 < n_qubits; ++q) {
            out.append({GateKind::CZ, q, q + 1});
        }
    }
    return out;
}

GateCircuit sample_two_design_circuit(int n_qubits, const TwoDesignConfig &cfg, RngStream &rng) {
    cfg.validate();
    return cfg.flavor == TwoDesignFlavor::clifford ? random_clifford_circuit(n_qubits, rng)
                                                   : brickwork_circuit(n_qubits, cfg.layers, rng);
}

DenseOperator two_design_unitary(int n_qubits, const TwoDesignConfig &cfg, RngStream &rng) {
    return sample_two_design_circuit(n_qubits, cfg, rng).to_dense();
}

}  // namespace raqprep
