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

#include "raqprep/engine/strategy.hpp"

#include <cmath>

#include "raqprep/sampling/pool.hpp"

namespace raqprep {

std::string to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::haar:
            return "haar";
        case StrategyKind::two_design:
            return "two_design";
        case StrategyKind::pool:
            return "pool";
    }
    return "unknown";
}

StrategyKind strategy_kind_from_string(const std::string &name) {
    if (name == "haar") return StrategyKind::haar;
    if (name == "two_design") return StrategyKind::two_design;
    if (name == "pool") return StrategyKind::pool;
    throw InvalidInput("unknown strategy '" + name + "' (haar, two_design, pool)");
}

PauliString RandomizationStrategy::resolved_generator(int n_qubits) const {
    return generator ? *generator : PauliString::single(n_qubits, 0, Pauli::X);
}

void RandomizationStrategy::validate(int n_qubits) const {
    require_qubit_count(n_qubits);
    if (kind == StrategyKind::pool) {
        if (pool.empty()) {
            throw InvalidInput("pool strategy needs a nonempty pool");
        }
        for (const auto &p : pool) {
            if (p.n_qubits() != n_qubits) throw InvalidInput("pool element " + p.label() + " has the wrong qubit count");
            if (p.is_identity() || p.coefficient() != 1.0) {
                throw InvalidInput("pool elements must be non-identity Pauli strings with coefficient 1");
            }
        }
        return;
    }
    const PauliString g = resolved_generator(n_qubits);
    if (g.n_qubits() != n_qubits) {
        throw InvalidInput("generator " + g.label() + " has the wrong qubit count");
    }
    if (g.trace() != 0.0 || std::abs(g.spectral_norm() - 1.0) > 0.0) {
        throw InvalidInput("generator must be traceless with spectral norm 1");
    }
    if (g.coefficient() != 1.0) {
        throw InvalidInput("generator coefficient must be +1");
    }
    design.validate();
}

Direction RandomizationStrategy::sample(int n_qubits, RngStream &rng) const {
    switch (kind) {
        case StrategyKind::pool:
            return Direction::pauli(sample_pool(pool, rng));
        case StrategyKind::haar:
            return Direction::conjugated(std::make_shared<const HaarUnitary>(HaarUnitary::sample(n_qubits, rng)),
                                         resolved_generator(n_qubits), "haar");
        case StrategyKind::two_design:
            return Direction::conjugated(std::make_shared<const GateCircuit>(sample_two_design_circuit(n_qubits, design, rng)),
                                         resolved_generator(n_qubits), to_string(design.flavor));
    }
    throw std::logic_error("unhandled strategy kind");
}

}  // namespace raqprep
