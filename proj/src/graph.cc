// Copyright 2026 The gselc Authors
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

#include "gselc/graph.h"

#include <string>

#include "gselc/error.h"

namespace gselc {

Graph::Graph(size_t n) : rows_(n, VertexSet(n)) {
}

Graph Graph::from_edges(size_t n, const std::vector<Edge> &edges) {
    Graph g(n);
    for (const auto &[a, b] : edges) {
        g.check_vertex(a);
        g.check_vertex(b);
        if (a == b) {
            throw Error(ErrorKind::SelfLoop, "self-loop on vertex " + std::to_string(a));
        }
        if (g.rows_[a].contains(b)) {
            throw Error(ErrorKind::ParseError,
                        "duplicate edge {" + std::to_string(a) + ", " + std::to_string(b) + "}");
        }
        g.toggle_in_place(a, b);
    }
    return g;
}

Graph Graph::empty(size_t n) {
    return Graph(n);
}

Graph Graph::star(size_t n_leaves) {
    Graph g(n_leaves + 1);
    for (size_t leaf = 1; leaf <= n_leaves; leaf++) {
        g.toggle_in_place(0, leaf);
    }
    return g;
}

Graph Graph::cycle(size_t n) {
    if (n < 3) {
        throw Error(ErrorKind::TooSmall, "cycle needs at least 3 vertices, got " + std::to_string(n));
    }
    Graph g(n);
    for (size_t i = 0; i < n; i++) {
        g.toggle_in_place(i, (i + 1) % n);
    }
    return g;
}

Graph Graph::path(size_t n) {
    Graph g(n);
    for (size_t i = 0; i + 1 < n; i++) {
        g.toggle_in_place(i, i + 1);
    }
    return g;
}

Graph Graph::complete(size_t n) {
    Graph g(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            g.toggle_in_place(i, j);
        }
    }
    return g;
}

void Graph::check_vertex(size_t v) const {
    if (v >= rows_.size()) {
        throw Error(ErrorKind::OutOfRange,
                    "vertex " + std::to_string(v) + " out of range for graph with " + std::to_string(rows_.size()) +
                        " vertices");
    }
}

void Graph::toggle_in_place(size_t a, size_t b) {
    rows_[a].flip(b);
    rows_[b].flip(a);
}

void Graph::complement_within(const VertexSet &set) {
    for (size_t v : set.members()) {
        rows_[v] ^= set;
        rows_[v].flip(v);
    }
}

size_t Graph::num_edges() const noexcept {
    size_t twice = 0;
    for (const auto &row : rows_) {
        twice += row.count();
    }
    return twice / 2;
}

size_t Graph::degree(size_t v) const {
    check_vertex(v);
    return rows_[v].count();
}

bool Graph::has_edge(size_t a, size_t b) const {
    check_vertex(a);
    check_vertex(b);
    return rows_[a].contains(b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (size_t a = 0; a < rows_.size(); a++) {
        for (size_t b : rows_[a].members()) {
            if (a < b) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

VertexSet Graph::neighborhood(size_t v) const {
    check_vertex(v);
    return rows_[v];
}

Graph Graph::toggle_edge(size_t a, size_t b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
        throw Error(ErrorKind::SelfLoop, "cannot toggle self-loop on vertex " + std::to_string(a));
    }
    Graph result = *this;
    result.toggle_in_place(a, b);
    return result;
}

Graph Graph::local_complement(size_t a) const {
    check_vertex(a);
    Graph result = *this;
    result.complement_within(rows_[a]);
    return result;
}

Graph Graph::edge_local_complement(size_t a, size_t b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b || !rows_[a].contains(b)) {
        throw Error(ErrorKind::NotAnEdge, "{" + std::to_string(a) + ", " + std::to_string(b) + "} is not an edge");
    }
    VertexSet only_a = rows_[a];
    only_a.erase(b);
    VertexSet only_b = rows_[b];
    only_b.erase(a);
    VertexSet shared = only_a & only_b;
    only_a.subtract(shared);
    only_b.subtract(shared);

    Graph result = *this;
    auto toggle_between = [&result](const VertexSet &x, const VertexSet &y) {
        for (size_t v : x.members()) {
            result.rows_[v] ^= y;
        }
        for (size_t u : y.members()) {
            result.rows_[u] ^= x;
        }
    };
    toggle_between(only_a, only_b);
    toggle_between(only_a, shared);
    toggle_between(only_b, shared);

    // Exchange the exclusive neighborhoods of a and b.
    for (size_t v : only_a.members()) {
        result.toggle_in_place(v, a);
        result.toggle_in_place(v, b);
    }
    for (size_t v : only_b.members()) {
        result.toggle_in_place(v, a);
        result.toggle_in_place(v, b);
    }
    return result;
}

Graph Graph::edge_local_complement_by_lc(size_t a, size_t b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b || !rows_[a].contains(b)) {
        throw Error(ErrorKind::NotAnEdge, "{" + std::to_string(a) + ", " + std::to_string(b) + "} is not an edge");
    }
    return local_complement(a).local_complement(b).local_complement(a);
}

Graph disjoint_union(const Graph &first, const Graph &second) {
    size_t offset = first.num_vertices();
    std::vector<Edge> edges = first.edges();
    for (const auto &[a, b] : second.edges()) {
        edges.emplace_back(a + offset, b + offset);
    }
    return Graph::from_edges(offset + second.num_vertices(), edges);
}

bool is_complete_bipartite(const Graph &g, const VertexSet &part_a, const VertexSet &part_b) {
    size_t n = g.num_vertices();
    if (part_a.universe() != n || part_b.universe() != n || !(part_a & part_b).empty() ||
        (part_a | part_b).count() != n) {
        throw Error(ErrorKind::NotAPartition, "parts do not partition the vertex set");
    }
    for (size_t v = 0; v < n; v++) {
        const VertexSet &other = part_a.contains(v) ? part_b : part_a;
        if (!(g.neighborhood(v) == other)) {
            return false;
        }
    }
    return true;
}

bool neighborhoods_disjoint(const Graph &g, size_t a, size_t b) {
    VertexSet na = g.neighborhood(a);
    VertexSet nb = g.neighborhood(b);
    if (a != b) {
        na.erase(b);
        nb.erase(a);
    }
    return (na & nb).empty();
}

}  // namespace gselc
