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

#ifndef GSELC_SUITES_H
#define GSELC_SUITES_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "gselc/graph.h"
#include "gselc/report.h"
#include "gselc/state_vector.h"

namespace gselc {

/// Seeded generator for the randomized suites.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded draws use rejection sampling on raw engine output rather
/// than std::uniform_int_distribution, whose algorithm varies between
/// standard libraries, so a seed replays identically everywhere.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    /// Uniform in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound);
    bool coin() {
        return (engine_() >> 63) != 0;
    }

   private:
    std::mt19937_64 engine_;
};

/// G(n, 1/2).
Graph random_graph(Rng &rng, size_t n);

/// Calls `fn` on every labelled simple graph with n vertices (2^{n(n-1)/2} of them).
void for_each_graph(size_t n, const std::function<void(const Graph &)> &fn);

struct SuiteOptions {
    size_t trials = 200;
    uint64_t seed = 0;
    double tol = kStateTolerance;
    size_t max_qubits = kDefaultMaxQubits;
};

/// Random (g1, c1, g2, c2) with 1 <= n1, n2 <= max_block, cores uniform; each
/// case runs verify_theorem1.
Report run_theorem1_suite(const SuiteOptions &options, size_t max_block = 6);

/// Random graphs with 1 <= n <= max_n; each runs verify_stabilizers.
Report run_stabilizer_suite(const SuiteOptions &options, size_t max_n = 8);

/// verify_vertex_lc for every graph with n <= max_n and every vertex.
Report run_vertex_lc_exhaustive(const SuiteOptions &options, size_t max_n = 5);

/// Graph-level identities on every graph with n <= max_n: LC involution, ELC
/// involution, LC(a)LC(b)LC(a) == LC(b)LC(a)LC(b), and direct ELC against the
/// three-LC composition.
Report run_graph_identity_suite(size_t max_n = 5);

/// Random graphs with an edge {a, b} whose endpoints share at least one
/// neighbor; records whether H_a H_b |G> matches |ELC(a, b) G>. Never fails:
/// the outcome is a finding, not an assertion.
Report search_shared_neighborhood(const SuiteOptions &options, size_t max_n = 7);

}  // namespace gselc

#endif
