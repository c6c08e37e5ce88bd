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

namespace raqprep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitRuntimeFailure = 2;

/// raqprep {run|sweep|verify|cool} [--config PATH] [--seed U64] [--out DIR]
/// [--format csv|jsonl|both] [--trials N] [--parallel N]
///
/// Returns 0 on success, 1 on a usage or config error, 2 on a runtime
/// failure or a failed verification. RAQ_PREP_THREADS overrides --parallel.
int cli_run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace raqprep
