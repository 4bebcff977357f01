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

#ifndef GSELC_QUADRATIC_FORM_H
#define GSELC_QUADRATIC_FORM_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gselc/graph.h"
#include "gselc/vertex_set.h"

namespace gselc {

/// Boolean polynomial sum_{i<j} Q_ij x_i x_j + sum_i L_i x_i over GF(2).
///
/// The graph state of a graph g has amplitudes (-1)^{p(x)} / sqrt(2^n) with
/// p = QuadraticForm::from_graph(g). The linear part records Z gates. Q is kept
/// strictly upper triangular so that equality is bitwise.
class QuadraticForm {
   public:
    explicit QuadraticForm(size_t n = 0);

    static QuadraticForm from_graph(const Graph &g);

    struct GraphPart {
        Graph graph;
        VertexSet residual_linear;
    };
    GraphPart to_graph() const;

    size_t num_variables() const noexcept {
        return linear_.universe();
    }
    bool has_term(size_t i, size_t j) const;
    bool has_linear(size_t i) const;
    size_t num_quadratic_terms() const noexcept;
    const VertexSet &linear() const noexcept {
        return linear_;
    }

    /// Variables sharing a quadratic term with x_a.
    VertexSet neighborhood(size_t a) const;

    /// p(x) mod 2. `x` must have universe num_variables().
    bool evaluate(const VertexSet &x) const;
    /// Same, with bit i of `basis_index` as x_i. Requires num_variables() <= 64.
    bool evaluate(uint64_t basis_index) const;

    /// Complements the quadratic terms among N(a); with `include_linear` also
    /// toggles x_b for every b in N(a) (the Z gates left behind by the
    /// sqrt(-iX) sqrt(iZ) realisation of LC).
    QuadraticForm apply_lc_update(size_t a, bool include_linear) const;

    void toggle_term(size_t i, size_t j);
    void toggle_linear(size_t i);
    /// Adds x_i x_j for every i in `left`, j in `right`; the sets must be disjoint.
    void add_products(const VertexSet &left, const VertexSet &right);
    /// Adds x_i x_j for every unordered pair {i, j} inside `set`.
    void add_pairs(const VertexSet &set);

    QuadraticForm &operator+=(const QuadraticForm &other);
    friend QuadraticForm operator+(QuadraticForm a, const QuadraticForm &b) {
        return a += b;
    }

    /// Sorted monomials, e.g. "x0*x1 + x1*x2 + x3"; the zero form is "0".
    std::string to_string() const;

    bool operator==(const QuadraticForm &other) const = default;

   private:
    void check_variable(size_t i) const;
    void check_same_size(const QuadraticForm &other) const;

    std::vector<VertexSet> upper_;
    VertexSet linear_;
};

/// Closed form of ELC(c1, c2) CZ_{c1,c2} |G1>|G2> (equivalently of the two
/// Hadamards on the cores). Vertices of g2 are offset by g1.num_vertices().
///
/// Keeps every edge of g1 and g2 not incident to a core, then adds c1 c2,
/// c1 x N(c2), c2 x N(c1) and the complete bipartite N(c1) x N(c2).
QuadraticForm elc_final_form(const Graph &g1, size_t c1, const Graph &g2, size_t c2);

/// Symbolic replay of H_c1 H_c2 acting on the joined graph, one LC at a time.
///
/// `q1`, `q2` are the block forms, `core_edge` is x_c1 x_c2. `r1`, `r2`, `r3`
/// are the closed-form edge sets added after LC(c1), LC(c2), LC(c1), each
/// measured against the joined graph G_u. `increments` holds the per-step
/// changes obtained by running apply_lc_update on the evolving form.
struct ElcDerivation {
    QuadraticForm q1;
    QuadraticForm q2;
    QuadraticForm core_edge;
    QuadraticForm r1;
    QuadraticForm r2;
    QuadraticForm r3;
    std::vector<QuadraticForm> increments;
    /// q1 + q2 + core_edge + r3.
    QuadraticForm composed;
};

ElcDerivation derive_elc(const Graph &g1, size_t c1, const Graph &g2, size_t c2);

}  // namespace gselc

#endif
