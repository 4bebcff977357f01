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

#include "gselc/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gselc/error.h"

namespace gselc {

Report verify_theorem1(const Graph &g1, size_t c1, const Graph &g2, size_t c2, double tol, size_t max_qubits) {
    size_t n1 = g1.num_vertices();
    size_t n = n1 + g2.num_vertices();
    if (n > max_qubits) {
        throw Error(ErrorKind::TooLarge, "theorem check needs " + std::to_string(n) + " qubits, maximum is " +
                                             std::to_string(max_qubits));
    }
    // Validates both core indices.
    g1.neighborhood(c1);
    g2.neighborhood(c2);
    size_t core2 = n1 + c2;

    StateVector lhs = tensor(graph_state(g1, max_qubits), graph_state(g2, max_qubits), max_qubits);
    const Gate lhs_gates[] = {Gate::cz(c1, core2), Gate::h(c1), Gate::h(core2)};
    nlohmann::ordered_json lhs_log = nlohmann::ordered_json::array();
    lhs_log.push_back("graph_state(G1) (x) graph_state(G2)");
    for (const auto &gate : lhs_gates) {
        lhs.apply(gate);
        lhs_log.push_back(gate.to_string());
    }

    Graph joined = disjoint_union(g1, g2).toggle_edge(c1, core2);
    Graph elc = joined.edge_local_complement(c1, core2);
    StateVector rhs = graph_state(elc, max_qubits);

    double diff = max_abs_diff(lhs, rhs);
    Report report;
    report.require(diff <= tol);
    report.details["n1"] = n1;
    report.details["n2"] = g2.num_vertices();
    report.details["c1"] = c1;
    report.details["c2"] = c2;
    report.details["lhs"] = std::move(lhs_log);
    report.details["rhs"] = "graph_state(ELC(" + std::to_string(c1) + "," + std::to_string(core2) +
                            ") of joined graph), " + std::to_string(elc.num_edges()) + " edges";
    report.details["max_amp_diff"] = diff;
    report.details["tolerance"] = tol;
    return report;
}

Report verify_vertex_lc(const Graph &g, size_t a, double tol, size_t max_qubits) {
    VertexSet nbrs = g.neighborhood(a);
    StateVector lhs = graph_state(g, max_qubits);
    lhs.apply(Gate::sqrt_minus_ix(a));
    for (size_t b : nbrs.members()) {
        lhs.apply(Gate::sqrt_iz(b));
    }
    StateVector rhs = graph_state(g.local_complement(a), max_qubits);
    nlohmann::ordered_json z_targets = nlohmann::ordered_json::array();
    for (size_t b : nbrs.members()) {
        rhs.apply(Gate::z(b));
        z_targets.push_back(b);
    }
    PhaseComparison cmp = equal_up_to_global_phase(lhs, rhs, tol);

    Report report;
    report.require(cmp.equal);
    report.details["vertex"] = a;
    report.details["z_corrections"] = std::move(z_targets);
    report.details["phase"] = {cmp.phase.real(), cmp.phase.imag()};
    report.details["residual"] = cmp.residual;
    report.details["tolerance"] = tol;
    return report;
}

Report verify_stabilizers(const Graph &g, double tol, size_t max_qubits) {
    StateVector state = graph_state(g, max_qubits);
    Report report;
    double worst = 0.0;
    for (size_t a = 0; a < g.num_vertices(); a++) {
        StateVector moved = state;
        moved.apply(Gate::x(a));
        for (size_t b : g.neighborhood(a).members()) {
            moved.apply(Gate::z(b));
        }
        double diff = max_abs_diff(moved, state);
        worst = std::max(worst, diff);
        report.require(diff <= tol);
    }
    report.details["n"] = g.num_vertices();
    report.details["generators"] = g.num_vertices();
    report.details["max_amp_diff"] = worst;
    report.details["tolerance"] = tol;
    return report;
}

Report ghz_amplitude_check(size_t n_leaves, double tol, size_t max_qubits) {
    size_t n = n_leaves + 1;
    StateVector star = graph_state(Graph::star(n_leaves), max_qubits);
    double scale = std::pow(2.0, -0.5 * static_cast<double>(n));
    double sign_diff = 0.0;
    for (uint64_t x = 0; x < star.dimension(); x++) {
        uint64_t hub = x & 1;
        int leaves = std::popcount(x >> 1);
        double expected = (hub && (leaves & 1)) ? -scale : scale;
        sign_diff = std::max(sign_diff, std::abs(star[x] - Amplitude{expected, 0.0}));
    }

    StateVector ghz = star;
    ghz.apply(Gate::h(0));
    std::vector<QubitState> pluses(n, QubitState::plus());
    std::vector<QubitState> minuses(n, QubitState::minus());
    StateVector expected = Amplitude{1.0 / std::sqrt(2.0), 0.0} *
                           (StateVector::product(pluses, max_qubits) + StateVector::product(minuses, max_qubits));
    double ghz_diff = max_abs_diff(ghz, expected);

    Report report;
    report.require(sign_diff <= tol);
    report.require(ghz_diff <= tol);
    report.details["n_leaves"] = n_leaves;
    report.details["sign_pattern_max_diff"] = sign_diff;
    report.details["ghz_max_diff"] = ghz_diff;
    report.details["tolerance"] = tol;
    return report;
}

HadamardPairOutcome compare_hadamard_pair_with_elc(const Graph &g, size_t a, size_t b, double tol,
                                                    size_t max_qubits) {
    Graph elc = g.edge_local_complement(a, b);
    StateVector lhs = graph_state(g, max_qubits);
    lhs.apply(Gate::h(a));
    lhs.apply(Gate::h(b));
    StateVector rhs = graph_state(elc, max_qubits);
    double diff = max_abs_diff(lhs, rhs);
    PhaseComparison cmp = equal_up_to_global_phase(lhs, rhs, tol);
    return {neighborhoods_disjoint(g, a, b), diff <= tol, cmp.equal, diff};
}

}  // namespace gselc
