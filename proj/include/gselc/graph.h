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

#ifndef GSELC_GRAPH_H
#define GSELC_GRAPH_H

#include <cstddef>
#include <utility>
#include <vector>

#include "gselc/vertex_set.h"

namespace gselc {

using Edge = std::pair<size_t, size_t>;

/// Simple undirected graph stored as a symmetric GF(2) adjacency bit-matrix.
///
/// Values are immutable from the outside: every transformation returns a new
/// graph. Row v of the matrix is the neighborhood of v. The diagonal is always
/// zero and the matrix is always symmetric.
class Graph {
   public:
    /// `n` isolated vertices.
    explicit Graph(size_t n = 0);

    /// Validating constructor. Rejects self-loops, repeated edges (in either
    /// orientation) and out-of-range endpoints.
    static Graph from_edges(size_t n, const std::vector<Edge> &edges);

    static Graph empty(size_t n);
    /// Vertex 0 is the hub; vertices 1..n_leaves are the leaves.
    static Graph star(size_t n_leaves);
    /// Edges {i, i+1 mod n}. Requires n >= 3.
    static Graph cycle(size_t n);
    /// Edges {i, i+1} for i + 1 < n.
    static Graph path(size_t n);
    static Graph complete(size_t n);

    size_t num_vertices() const noexcept {
        return rows_.size();
    }
    size_t num_edges() const noexcept;
    size_t degree(size_t v) const;
    bool has_edge(size_t a, size_t b) const;

    /// Edges as (a, b) with a < b, sorted lexicographically.
    std::vector<Edge> edges() const;

    VertexSet neighborhood(size_t v) const;

    [[nodiscard]] Graph toggle_edge(size_t a, size_t b) const;

    /// Complements the subgraph induced on N(a).
    [[nodiscard]] Graph local_complement(size_t a) const;

    /// Edge local complementation (pivot) on the edge {a, b}.
    ///
    /// Computed directly: the vertices of N(a) u N(b) \ {a, b} split into
    /// a-only, b-only and shared classes, every pair drawn from two different
    /// classes is toggled, then the neighborhoods of a and b are exchanged.
    /// Agrees with LC(a) LC(b) LC(a) on every graph.
    [[nodiscard]] Graph edge_local_complement(size_t a, size_t b) const;

    /// Reference path: three literal local complementations LC(a), LC(b), LC(a).
    [[nodiscard]] Graph edge_local_complement_by_lc(size_t a, size_t b) const;

    bool operator==(const Graph &other) const = default;

   private:
    void check_vertex(size_t v) const;
    void toggle_in_place(size_t a, size_t b);
    void complement_within(const VertexSet &set);

    std::vector<VertexSet> rows_;
};

/// Places `second` after `first`: vertex v of `second` becomes first.num_vertices() + v.
Graph disjoint_union(const Graph &first, const Graph &second);

/// True iff every edge between `part_a` and `part_b` is present and neither part
/// contains an internal edge. The parts must partition the vertex set.
bool is_complete_bipartite(const Graph &g, const VertexSet &part_a, const VertexSet &part_b);

/// N(a) \ {b} and N(b) \ {a} have no common member.
bool neighborhoods_disjoint(const Graph &g, size_t a, size_t b);

}  // namespace gselc

#endif
