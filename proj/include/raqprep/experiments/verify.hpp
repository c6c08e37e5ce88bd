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

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "raqprep/bounds/bounds.hpp"
#include "raqprep/experiments/config.hpp"

namespace raqprep {

struct VerifyEntry {
    BoundReport report;
    /// Reported but excluded from the pass/fail verdict.
    bool diagnostic = false;
};

struct VerifyResult {
    std::vector<VerifyEntry> entries;

    /// Every non-diagnostic report satisfied.
    bool passed() const;
};

/// Bound-verification suite: Lipschitz constant and sampled slopes, per-step
/// improvement over runs of all strategies, step-count bound, 2-design
/// expectation bound and second-moment identity (haar, clifford), pool
/// average bound, and brickwork first/second-moment diagnostics.
VerifyResult run_verify(const ExperimentConfig &cfg, int parallel);

void print_verify_table(std::ostream &out, const VerifyResult &result);
nlohmann::ordered_json to_json(const VerifyResult &result);

}  // namespace raqprep
