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

#ifndef GSELC_ORACLE_H
#define GSELC_ORACLE_H

#include <cstddef>

#include "gselc/graph.h"
#include "gselc/report.h"
#include "gselc/state_vector.h"

namespace gselc {

/// Checks H_c1 H_c2 CZ_{c1,c2} |G1>|G2> == |ELC(c1, c2) G_u>, component-wise at `tol`.
///
/// G_u is disjoint_union(g1, g2) plus the core edge; c2 is an index into g2.
Report verify_theorem1(const Graph &g1, size_t c1, const Graph &g2, size_t c2, double tol = kStateTolerance,
                       size_t max_qubits = kDefaultMaxQubits);

/// Checks sqrt(-iX_a) prod_{b in N(a)} sqrt(iZ_b) |G> against
/// prod_{b in N(a)} Z_b |LC(a) G> up to a global phase.
Report verify_vertex_lc(const Graph &g, size_t a, double tol = kStateTolerance,
                        size_t max_qubits = kDefaultMaxQubits);

/// Applies every generator X_a prod_{b in N(a)} Z_b to |G> and checks it is fixed.
Report verify_stabilizers(const Graph &g, double tol = kStateTolerance, size_t max_qubits = kDefaultMaxQubits);

/// Star graph state sign pattern (-1)^{x_hub * sum x_leaf}, and H on the hub
/// producing (|+>^{n+1} + |->^{n+1}) / sqrt(2).
Report ghz_amplitude_check(size_t n_leaves, double tol = kGateTolerance, size_t max_qubits = kDefaultMaxQubits);

struct HadamardPairOutcome {
    bool neighborhoods_disjoint;
    bool equal_exact;
    bool equal_up_to_phase;
    double max_amp_diff;
};

/// Compares H_a H_b |G> with |ELC(a, b) G> for an arbitrary edge, including
/// edges whose endpoints share neighbors.
HadamardPairOutcome compare_hadamard_pair_with_elc(const Graph &g, size_t a, size_t b,
                                                    double tol = kStateTolerance,
                                                    size_t max_qubits = kDefaultMaxQubits);

}  // namespace gselc

#endif
