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

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace raqprep {

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

/// Simple undirected weighted graph. Edges are stored with u < v, sorted.
class Graph {
   public:
    Graph(int n_vertices, std::vector<Edge> edges);

    static Graph complete(int n_vertices);

    /// One `u v [weight]` per line, 0-indexed. Blank lines and lines starting
    /// with '#' are skipped. Without `n_vertices` the vertex count is one
    /// past the largest index seen.
    static Graph parse_edge_list(std::istream &in, std::optional<int> n_vertices = std::nullopt);

    int n_vertices() const { return n_vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }
    int degree(int vertex) const;
    bool has_edge(int u, int v) const;
    bool is_regular(int degree) const;

    std::string to_edge_list() const;

   private:
    int n_vertices_;
    std::vector<Edge> edges_;
};

}  // namespace raqprep
