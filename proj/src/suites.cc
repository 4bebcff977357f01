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

#include "gselc/suites.h"

#include <algorithm>
#include <string>

#include "gselc/error.h"
#include "gselc/graph_io.h"
#include "gselc/oracle.h"

namespace gselc {

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) {
        throw Error(ErrorKind::OutOfRange, "Rng::below needs a positive bound");
    }
    uint64_t threshold = (0 - bound) % bound;
    while (true) {
        uint64_t r = engine_();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

Graph random_graph(Rng &rng, size_t n) {
    std::vector<Edge> edges;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (rng.coin()) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

void for_each_graph(size_t n, const std::function<void(const Graph &)> &fn) {
    std::vector<Edge> pairs;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            pairs.emplace_back(a, b);
        }
    }
    if (pairs.size() >= 40) {
        throw Error(ErrorKind::TooLarge, "refusing to enumerate graphs on " + std::to_string(n) + " vertices");
    }
    uint64_t total = uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (uint64_t mask = 0; mask < total; mask++) {
        edges.clear();
        for (size_t k = 0; k < pairs.size(); k++) {
            if ((mask >> k) & 1) {
                edges.push_back(pairs[k]);
            }
        }
        fn(Graph::from_edges(n, edges));
    }
}

namespace {

nlohmann::ordered_json edge_list(const Graph &g) {
    auto out = nlohmann::ordered_json::array();
    for (const auto &[a, b] : g.edges()) {
        out.push_back({a, b});
    }
    return out;
}

void stamp(Report &report, const std::string &suite, const SuiteOptions &options) {
    report.details["suite"] = suite;
    report.details["trials"] = options.trials;
    report.details["seed"] = options.seed;
    report.details["tolerance"] = options.tol;
}

}  // namespace

Report run_theorem1_suite(const SuiteOptions &options, size_t max_block) {
    Rng rng(options.seed);
    Report report;
    stamp(report, "theorem1", options);
    auto cases = nlohmann::ordered_json::array();
    double worst = 0.0;
    size_t failures = 0;
    for (size_t trial = 0; trial < options.trials; trial++) {
        size_t n1 = 1 + rng.below(max_block);
        size_t n2 = 1 + rng.below(max_block);
        Graph g1 = random_graph(rng, n1);
        Graph g2 = random_graph(rng, n2);
        size_t c1 = rng.below(n1);
        size_t c2 = rng.below(n2);
        Report one = verify_theorem1(g1, c1, g2, c2, options.tol, options.max_qubits);
        double diff = one.details["max_amp_diff"].get<double>();
        worst = std::max(worst, diff);
        failures += one.passed ? 0 : 1;
        report.require(one.passed);
        cases.push_back({{"trial", trial},
                         {"g1", edge_list(g1)},
                         {"n1", n1},
                         {"c1", c1},
                         {"g2", edge_list(g2)},
                         {"n2", n2},
                         {"c2", c2},
                         {"max_amp_diff", diff},
                         {"passed", one.passed}});
    }
    report.details["failures"] = failures;
    report.details["max_amp_diff"] = worst;
    report.details["cases"] = std::move(cases);
    return report;
}

Report run_stabilizer_suite(const SuiteOptions &options, size_t max_n) {
    Rng rng(options.seed);
    Report report;
    stamp(report, "stabilizers", options);
    auto cases = nlohmann::ordered_json::array();
    double worst = 0.0;
    for (size_t trial = 0; trial < options.trials; trial++) {
        size_t n = 1 + rng.below(max_n);
        Graph g = random_graph(rng, n);
        Report one = verify_stabilizers(g, options.tol, options.max_qubits);
        double diff = one.details["max_amp_diff"].get<double>();
        worst = std::max(worst, diff);
        report.require(one.passed);
        cases.push_back({{"trial", trial}, {"n", n}, {"edges", edge_list(g)}, {"max_amp_diff", diff},
                         {"passed", one.passed}});
    }
    report.details["max_amp_diff"] = worst;
    report.details["cases"] = std::move(cases);
    return report;
}

Report run_vertex_lc_exhaustive(const SuiteOptions &options, size_t max_n) {
    Report report;
    report.details["suite"] = "vertex-lc";
    report.details["max_n"] = max_n;
    report.details["tolerance"] = options.tol;
    size_t checks = 0;
    size_t failures = 0;
    double worst = 0.0;
    for (size_t n = 1; n <= max_n; n++) {
        for_each_graph(n, [&](const Graph &g) {
            for (size_t a = 0; a < n; a++) {
                Report one = verify_vertex_lc(g, a, options.tol, options.max_qubits);
                worst = std::max(worst, one.details["residual"].get<double>());
                failures += one.passed ? 0 : 1;
                checks++;
            }
        });
    }
    report.require(failures == 0);
    report.details["checks"] = checks;
    report.details["failures"] = failures;
    report.details["max_residual"] = worst;
    return report;
}

Report run_graph_identity_suite(size_t max_n) {
    Report report;
    report.details["suite"] = "graph-identities";
    report.details["max_n"] = max_n;
    size_t graphs = 0;
    size_t lc_checks = 0;
    size_t edge_checks = 0;
    size_t lc_involution_failures = 0;
    size_t elc_involution_failures = 0;
    size_t elc_symmetry_failures = 0;
    size_t elc_direct_failures = 0;
    for (size_t n = 0; n <= max_n; n++) {
        for_each_graph(n, [&](const Graph &g) {
            graphs++;
            for (size_t a = 0; a < n; a++) {
                lc_checks++;
                if (!(g.local_complement(a).local_complement(a) == g)) {
                    lc_involution_failures++;
                }
            }
            for (const auto &[a, b] : g.edges()) {
                edge_checks++;
                Graph aba = g.edge_local_complement_by_lc(a, b);
                Graph bab = g.local_complement(b).local_complement(a).local_complement(b);
                Graph direct = g.edge_local_complement(a, b);
                if (!(aba == bab)) {
                    elc_symmetry_failures++;
                }
                if (!(direct == aba)) {
                    elc_direct_failures++;
                }
                if (!(direct.edge_local_complement(a, b) == g)) {
                    elc_involution_failures++;
                }
            }
        });
    }
    report.require(lc_involution_failures == 0);
    report.require(elc_involution_failures == 0);
    report.require(elc_symmetry_failures == 0);
    report.require(elc_direct_failures == 0);
    report.details["graphs"] = graphs;
    report.details["lc_checks"] = lc_checks;
    report.details["edge_checks"] = edge_checks;
    report.details["lc_involution_failures"] = lc_involution_failures;
    report.details["elc_involution_failures"] = elc_involution_failures;
    report.details["elc_symmetry_failures"] = elc_symmetry_failures;
    report.details["elc_direct_failures"] = elc_direct_failures;
    return report;
}

Report search_shared_neighborhood(const SuiteOptions &options, size_t max_n) {
    Rng rng(options.seed);
    Report report;
    stamp(report, "shared-neighborhood-search", options);
    size_t examined = 0;
    size_t exact = 0;
    size_t up_to_phase_only = 0;
    size_t unequal = 0;
    nlohmann::ordered_json first_counterexample = nullptr;
    size_t attempts = 0;
    while (examined < options.trials && attempts < 100 * options.trials + 100) {
        attempts++;
        size_t n = 3 + rng.below(max_n - 2);
        Graph g = random_graph(rng, n);
        auto edges = g.edges();
        if (edges.empty()) {
            continue;
        }
        auto [a, b] = edges[rng.below(edges.size())];
        if (neighborhoods_disjoint(g, a, b)) {
            continue;
        }
        examined++;
        HadamardPairOutcome outcome = compare_hadamard_pair_with_elc(g, a, b, options.tol, options.max_qubits);
        if (outcome.equal_exact) {
            exact++;
        } else if (outcome.equal_up_to_phase) {
            up_to_phase_only++;
        } else {
            unequal++;
            if (first_counterexample.is_null()) {
                first_counterexample = {{"n", n}, {"edges", edge_list(g)}, {"a", a}, {"b", b},
                                        {"max_amp_diff", outcome.max_amp_diff}};
            }
        }
    }
    report.details["examined"] = examined;
    report.details["equal_exact"] = exact;
    report.details["equal_up_to_phase_only"] = up_to_phase_only;
    report.details["unequal"] = unequal;
    report.details["first_counterexample"] = std::move(first_counterexample);
    return report;
}

}  // namespace gselc
