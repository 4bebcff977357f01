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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gselc/graph.h"
#include "gselc/logical_encoding.h"
#include "gselc/oracle.h"
#include "gselc/state_vector.h"
#include "gselc/suites.h"

using namespace gselc;

namespace {

constexpr double kTol = 1e-9;
constexpr double kGhzTol = 1e-12;

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;  // <= 0 means no runtime bound
    std::function<Outcome()> body;
};

std::string fmt(const char *format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

bool same_edges(const Graph &g, std::vector<Edge> expected) {
    return g == Graph::from_edges(g.num_vertices(), expected);
}

StateVector uniform(QubitState q) {
    std::array<QubitState, 5> qs;
    qs.fill(q);
    return StateVector::product(qs);
}

// Path a1 - c1 - c2 - a2 labelled 0 - 1 - 2 - 3.
Outcome path_replay() {
    Graph g = Graph::path(4);
    Graph s1 = g.local_complement(1);
    Graph s2 = s1.local_complement(2);
    Graph s3 = s2.local_complement(1);
    bool ok = same_edges(s1, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}) &&
              same_edges(s2, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) &&
              same_edges(s3, {{1, 2}, {1, 3}, {0, 2}, {0, 3}}) && s3.num_edges() == 4 &&
              s3 == g.edge_local_complement(1, 2);
    return {ok, "edges " + std::to_string(s1.num_edges()) + "/" + std::to_string(s2.num_edges()) + "/" +
                    std::to_string(s3.num_edges())};
}

Outcome joined_cores() {
    SuiteOptions opts;
    opts.trials = 200;
    opts.seed = 0;
    opts.tol = kTol;
    Report r = run_theorem1_suite(opts, 6);
    return {r.passed, "200 trials, max diff " + fmt("%.3g", r.details["max_amp_diff"].get<double>()) +
                          " (tol 1e-9)"};
}

Outcome complete_bipartite() {
    Graph g = disjoint_union(Graph::star(4), Graph::star(4));
    g = g.toggle_edge(0, 5);
    Graph k = g.edge_local_complement(0, 5);
    bool ok = k.num_edges() == 25 &&
              is_complete_bipartite(k, VertexSet(10, {0, 1, 2, 3, 4}), VertexSet(10, {5, 6, 7, 8, 9}));
    return {ok, std::to_string(k.num_edges()) + " edges"};
}

Outcome gate_counts() {
    Construction direct = build_cs2_direct();
    ElcConstruction elc = build_cs2_elc(kTol);
    bool ok = direct.log.cz_count() == 35 && direct.log.cz_count("logical_cz") == 25 &&
              elc.log.cz_count() == 19 && elc.log.hadamard_count() == 2;
    char buf[128];
    std::snprintf(buf, sizeof buf, "direct CZ %zu (logical %zu), ELC CZ %zu, H %zu", direct.log.cz_count(),
                  direct.log.cz_count("logical_cz"), elc.log.cz_count(), elc.log.hadamard_count());
    return {ok, buf};
}

Outcome cs2_equality() {
    Construction direct = build_cs2_direct();
    ElcConstruction elc = build_cs2_elc(kTol);
    double diff = max_abs_diff(direct.state, elc.state);
    return {direct.state.dimension() == 1024 && diff <= kTol,
            "1024 amplitudes, max diff " + fmt("%.3g", diff) + " (tol 1e-9)"};
}

Outcome ghz() {
    StateVector sv = StateVector::product(
        std::array<QubitState, 5>{QubitState::ket0(), QubitState::plus(), QubitState::plus(), QubitState::plus(),
                                  QubitState::plus()});
    CircuitLog log;
    ghz_encode(sv, LogicalRegister::block(0), log);
    StateVector expected = uniform(QubitState::plus()) + uniform(QubitState::minus());
    expected *= 1.0 / std::sqrt(2.0);
    double diff = max_abs_diff(sv, expected);
    return {diff <= kGhzTol, "max diff " + fmt("%.3g", diff) + " (tol 1e-12)"};
}

Outcome expansion() {
    StateVector p = uniform(QubitState::plus()), m = uniform(QubitState::minus());
    StateVector expected = tensor(p, p + m) + tensor(m, p - m);
    expected *= 0.5;
    ElcConstruction elc = build_cs2_elc(kTol);
    double diff = max_abs_diff(elc.pre_pentagon, expected);
    return {diff <= kTol, "max diff " + fmt("%.3g", diff) + " (tol 1e-9)"};
}

Outcome chain_steps() {
    Report r = verify_chain_elc_steps(4, kTol);
    // a1 b1 c1 d1 are core vertices 0 1 2 3.
    const auto &steps = r.details["steps"];
    bool ok = r.passed && steps.size() == 2 &&
              steps[0]["edges"] == nlohmann::ordered_json::parse("[[0,1],[0,2],[2,3]]") &&
              steps[1]["edges"] == nlohmann::ordered_json::parse("[[0,1],[0,3],[2,3]]");
    return {ok, "inter " + steps[0]["edges"].dump() + ", final " + steps[1]["edges"].dump()};
}

Outcome full_chain() {
    Construction direct = build_cluster_direct(4);
    ElcConstruction elc = build_cluster_elc(4, kTol);
    double diff = max_abs_diff(direct.state, elc.state);
    bool ok = direct.state.dimension() == (size_t{1} << 20) && diff <= kTol && elc.tracking.passed;
    char buf[160];
    std::snprintf(buf, sizeof buf, "2^20 amplitudes, max diff %.3g (tol 1e-9); CZ ELC %zu vs direct %zu", diff,
                  elc.log.cz_count(), direct.log.cz_count());
    return {ok, buf};
}

Outcome properties() {
    Report ids = run_graph_identity_suite(5);
    SuiteOptions opts;
    opts.trials = 50;
    opts.seed = 0;
    opts.tol = kTol;
    Report stab = run_stabilizer_suite(opts, 8);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu graphs exhaustive; 50 stabilizer graphs, max diff %.3g (tol 1e-9)",
                  ids.details["graphs"].get<size_t>(), stab.details["max_amp_diff"].get<double>());
    return {ids.passed && stab.passed, buf};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"AC1", "path ELC replay as three local complementations", 1e-3, path_replay},
        {"AC2", "Hadamard pair on joined graphs equals ELC graph state", 10.0, joined_cores},
        {"AC3", "joined stars become K5,5 after ELC", 1e-3, complete_bipartite},
        {"AC4", "two-block CZ and Hadamard counts", 0.0, gate_counts},
        {"AC5", "direct and ELC two-block states agree", 1.0, cs2_equality},
        {"AC6", "GHZ encoding of |0>", 0.0, ghz},
        {"AC7", "pre-pentagon state equals four-term expansion", 0.0, expansion},
        {"AC8", "four-qubit chain ELC steps", 0.0, chain_steps},
        {"AC9", "four logical qubits, 20-qubit equality", 60.0, full_chain},
        {"AC10", "graph identities and stabilizer fixed points", 30.0, properties},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
        bool passed = out.ok && in_time;
        failures += !passed;
        std::string limit = c.limit_seconds > 0 ? fmt(" (limit %gs)", c.limit_seconds) : "";
        std::printf("[%s] %-5s %s: %s; %.4fs%s%s\n", passed ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                    out.detail.c_str(), seconds, limit.c_str(), in_time ? "" : " EXCEEDED");
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
