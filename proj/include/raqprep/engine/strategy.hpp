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

#include <optional>
#include <string>
#include <vector>

#include "raqprep/engine/direction.hpp"
#include "raqprep/sampling/rng.hpp"
#include "raqprep/sampling/two_design.hpp"

namespace raqprep {

enum class StrategyKind { haar, two_design, pool };

std::string to_string(StrategyKind kind);
StrategyKind strategy_kind_from_string(const std::string &name);

/// How each step picks its direction H_k.
struct RandomizationStrategy {
    StrategyKind kind = StrategyKind::haar;
    /// Generator conjugated by V_k; X on qubit 0 when unset.
    std::optional<PauliString> generator;
    TwoDesignConfig design;
    /// Ordered pool for the pool kind.
    std::vector<PauliString> pool;

    PauliString resolved_generator(int n_qubits) const;
    /// Generator traceless with unit norm on the right register; pool
    /// nonempty with unit-coefficient, non-identity strings.
    void validate(int n_qubits) const;
    Direction sample(int n_qubits, RngStream &rng) const;
};

}  // namespace raqprep
