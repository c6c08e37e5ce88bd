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

#include "raqprep/sampling/pool.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace raqprep {

std::vector<PauliString> all_paulis(int n_qubits) {
    require_qubit_count(n_qubits);
    const std::size_t total = std::size_t{1} << (2 * n_qubits);
    std::vector<std::string> labels;
    labels.reserve(total - 1);
    std::string label(static_cast<std::size_t>(n_qubits), 'I');
    static constexpr char kSymbols[] = {'I', 'X', 'Y', 'Z'};
    for (std::size_t code = 1; code < total; ++code) {
        // Base-4 digits, qubit 0 most significant.
        std::size_t c = code;
        for (int q = n_qubits - 1; q >= 0; --q) {
            label[static_cast<std::size_t>(q)] = kSymbols[c & 3];
            c >>= 2;
        }
        labels.push_back(label);
    }
    auto weight = [](const std::string &s) { return std::count_if(s.begin(), s.end(), [](char ch) { return ch != 'I'; }); };
    std::stable_sort(labels.begin(), labels.end(), [&](const std::string &a, const std::string &b) {
        const auto wa = weight(a);
        const auto wb = weight(b);
        return wa != wb ? wa < wb : a < b;
    });
    std::vector<PauliString> out;
    out.reserve(labels.size());
    for (const auto &l : labels) out.emplace_back(l);
    return out;
}

std::vector<PauliString> weight_graded_pool(int n_qubits, std::size_t size) {
    std::vector<PauliString> all = all_paulis(n_qubits);
    if (size == 0 || size > all.size()) {
        throw InvalidInput("pool size must be in [1, " + std::to_string(all.size()) + "], got " + std::to_string(size));
    }
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(size), all.end());
    return all;
}

std::size_t pool_size_up_to_weight(int n_qubits, int max_weight) {
    require_qubit_count(n_qubits);
    std::size_t count = 0;
    std::size_t binom = 1;  // C(n, w)
    std::size_t threes = 1; // 3^w
    for (int w = 1; w <= std::min(max_weight, n_qubits); ++w) {
        binom = binom * static_cast<std::size_t>(n_qubits - w + 1) / static_cast<std::size_t>(w);
        threes *= 3;
        count += binom * threes;
    }
    return count;
}

const PauliString &sample_pool(std::span<const PauliString> pool, RngStream &rng) {
    if (pool.empty()) {
        throw InvalidInput("cannot sample from an empty pool");
    }
    return pool[rng.uniform_index(pool.size())];
}

Graph random_regular_graph(int n_vertices, int degree, RngStream &rng) {
    if (n_vertices < 1 || degree < 0) {
        throw InvalidInput("regular graph needs n >= 1 and degree >= 0");
    }
    if (degree >= n_vertices) {
        throw InvalidInput("degree " + std::to_string(degree) + " must be below vertex count " + std::to_string(n_vertices));
    }
    if ((n_vertices * degree) % 2 != 0) {
        throw InvalidInput("n * degree must be even for a regular graph");
    }
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n_vertices * degree));
    for (int v = 0; v < n_vertices; ++v) {
        for (int j = 0; j < degree; ++j) stubs.push_back(v);
    }
    constexpr int kMaxAttempts = 1'000'000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        // Fisher-Yates with our own index draws, so the result does not depend
        // on the standard library's shuffle implementation.
        for (std::size_t i = stubs.size(); i > 1; --i) {
            std::swap(stubs[i - 1], stubs[rng.uniform_index(i)]);
        }
        std::set<std::pair<int, int>> seen;
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            const int u = std::min(stubs[i], stubs[i + 1]);
            const int v = std::max(stubs[i], stubs[i + 1]);
            if (u == v || !seen.emplace(u, v).second) {
                ok = false;
                break;
            }
            edges.push_back({u, v});
        }
        if (ok) return Graph(n_vertices, std::move(edges));
    }
    throw std::runtime_error("pairing model failed to produce a simple graph");
}

}  // namespace raqprep
