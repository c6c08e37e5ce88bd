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

#include "raqprep/hamiltonians/graph.hpp"

#include <algorithm>
#include <sstream>

#include "raqprep/linalg/types.hpp"

namespace raqprep {

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_vertices_(n_vertices), edges_(std::move(edges)) {
    if (n_vertices_ < 1) {
        throw InvalidInput("graph needs at least one vertex");
    }
    for (auto &e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n_vertices_ || e.v >= n_vertices_) {
            throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
        }
        if (e.u == e.v) {
            throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            throw InvalidInput("duplicate edge (" + std::to_string(edges_[i].u) + "," + std::to_string(edges_[i].v) +
                               ")");
        }
    }
}

Graph Graph::complete(int n_vertices) {
    std::vector<Edge> edges;
    for (int u = 0; u < n_vertices; ++u) {
        for (int v = u + 1; v < n_vertices; ++v) {
            edges.push_back({u, v, 1.0});
        }
    }
    return {n_vertices, std::move(edges)};
}

Graph Graph::parse_edge_list(std::istream &in, std::optional<int> n_vertices) {
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;
    int max_index = -1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        Edge e;
        if (!(fields >> e.u >> e.v)) {
            throw InvalidInput("edge list line " + std::to_string(line_no) + ": expected `u v [weight]`");
        }
        if (!(fields >> e.weight)) {
            e.weight = 1.0;
            fields.clear();
        }
        std::string rest;
        if (fields >> rest) {
            throw InvalidInput("edge list line " + std::to_string(line_no) + ": trailing field '" + rest + "'");
        }
        max_index = std::max({max_index, e.u, e.v});
        edges.push_back(e);
    }
    return {n_vertices.value_or(max_index + 1), std::move(edges)};
}

int Graph::degree(int vertex) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                          [vertex](const Edge &e) { return e.u == vertex || e.v == vertex; }));
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::any_of(edges_.begin(), edges_.end(), [u, v](const Edge &e) { return e.u == u && e.v == v; });
}

bool Graph::is_regular(int d) const {
    for (int v = 0; v < n_vertices_; ++v) {
        if (degree(v) != d) return false;
    }
    return true;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    for (const auto &e : edges_) {
        out << e.u << ' ' << e.v;
        if (e.weight != 1.0) out << ' ' << e.weight;
        out << '\n';
    }
    return out.str();
}

}  // namespace raqprep
