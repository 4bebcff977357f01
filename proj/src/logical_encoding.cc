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

#include "gselc/logical_encoding.h"

#include <cmath>
#include <set>
#include <string>

#include "gselc/error.h"

namespace gselc {

namespace {

constexpr size_t kBlockSize = 5;

void check_chain_length(size_t n_logical) {
    if (n_logical % 2 != 0) {
        throw Error(ErrorKind::OddLength, "chain of " + std::to_string(n_logical) +
                                              " logical qubits has no pairing into edge local complementations");
    }
    if (n_logical < 2) {
        throw Error(ErrorKind::TooSmall, "chain needs at least 2 logical qubits");
    }
}

void check_budget(size_t qubits, size_t max_qubits) {
    if (qubits > max_qubits) {
        throw Error(ErrorKind::TooLarge, "construction needs " + std::to_string(qubits) +
                                             " qubits, maximum is " + std::to_string(max_qubits));
    }
}

nlohmann::ordered_json edge_list(const Graph &g) {
    auto out = nlohmann::ordered_json::array();
    for (const auto &[a, b] : g.edges()) {
        out.push_back({a, b});
    }
    return out;
}

}  // namespace

LogicalRegister LogicalRegister::block(size_t j) {
    size_t base = kBlockSize * j;
    return {base, {base + 1, base + 2, base + 3, base + 4}};
}

std::array<size_t, 5> LogicalRegister::qubits() const {
    return {core, ancillae[0], ancillae[1], ancillae[2], ancillae[3]};
}

void check_registers_disjoint(std::span<const LogicalRegister> registers) {
    std::set<size_t> seen;
    for (const auto &reg : registers) {
        for (size_t q : reg.qubits()) {
            if (!seen.insert(q).second) {
                throw Error(ErrorKind::OutOfRange, "qubit " + std::to_string(q) + " used by more than one register slot");
            }
        }
    }
}

void CircuitLog::record(const Gate &gate, std::string_view stage, bool identity_position) {
    gates_.push_back({gate, std::string(stage), identity_position});
    if (gate.kind() == GateKind::CZ) {
        cz_count_++;
    } else if (gate.kind() == GateKind::H) {
        if (identity_position) {
            identity_hadamard_count_++;
        } else {
            hadamard_count_++;
        }
    }
}

size_t CircuitLog::cz_count(std::string_view stage) const {
    size_t total = 0;
    for (const auto &entry : gates_) {
        if (entry.gate.kind() == GateKind::CZ && entry.stage == stage) {
            total++;
        }
    }
    return total;
}

void apply_logged(StateVector &sv, CircuitLog &log, const Gate &gate, std::string_view stage,
                  bool identity_position) {
    sv.apply(gate);
    log.record(gate, stage, identity_position);
}

StateVector replay(const CircuitLog &log, StateVector initial) {
    for (const auto &entry : log.gates()) {
        initial.apply(entry.gate);
    }
    return initial;
}

void ghz_encode(StateVector &sv, const LogicalRegister &reg, CircuitLog &log) {
    std::array<LogicalRegister, 1> one{reg};
    check_registers_disjoint(one);
    apply_logged(sv, log, Gate::h(reg.core), "ghz");
    for (size_t a : reg.ancillae) {
        apply_logged(sv, log, Gate::cz(reg.core, a), "ghz");
    }
    apply_logged(sv, log, Gate::h(reg.core), "ghz");
}

void pentagon(StateVector &sv, const LogicalRegister &reg, CircuitLog &log) {
    auto q = reg.qubits();
    for (size_t k = 0; k < q.size(); k++) {
        apply_logged(sv, log, Gate::cz(q[k], q[(k + 1) % q.size()]), "pentagon");
    }
}

void encode_logical(StateVector &sv, const LogicalRegister &reg, CircuitLog &log) {
    ghz_encode(sv, reg, log);
    pentagon(sv, reg, log);
}

void logical_cz(StateVector &sv, const LogicalRegister &a, const LogicalRegister &b, CircuitLog &log) {
    std::array<LogicalRegister, 2> both{a, b};
    check_registers_disjoint(both);
    for (size_t p : a.qubits()) {
        for (size_t q : b.qubits()) {
            apply_logged(sv, log, Gate::cz(p, q), "logical_cz");
        }
    }
}

Construction build_cluster_direct(size_t n_logical, size_t max_qubits) {
    if (n_logical == 0) {
        throw Error(ErrorKind::TooSmall, "need at least one logical qubit");
    }
    check_budget(kBlockSize * n_logical, max_qubits);
    Construction out{StateVector::plus(kBlockSize * n_logical, max_qubits), {}};
    for (size_t j = 0; j < n_logical; j++) {
        pentagon(out.state, LogicalRegister::block(j), out.log);
    }
    for (size_t j = 0; j + 1 < n_logical; j++) {
        logical_cz(out.state, LogicalRegister::block(j), LogicalRegister::block(j + 1), out.log);
    }
    return out;
}

ElcConstruction build_cluster_elc(size_t n_logical, double tol, size_t max_qubits) {
    check_chain_length(n_logical);
    size_t n = kBlockSize * n_logical;
    check_budget(n, max_qubits);

    StateVector sv = StateVector::plus(n, max_qubits);
    CircuitLog log;
    Graph tracked(n);
    Report tracking;
    auto steps = nlohmann::ordered_json::array();

    auto core = [](size_t j) { return LogicalRegister::block(j).core; };
    auto check_tracked = [&](const std::string &label) {
        double diff = max_abs_diff(sv, graph_state(tracked, max_qubits));
        tracking.require(diff <= tol);
        steps.push_back({{"after", label}, {"edges", tracked.num_edges()}, {"max_amp_diff", diff}});
    };
    auto hadamard_round = [&](const std::string &stage) {
        for (size_t j = 0; j + 1 < n_logical; j += 2) {
            size_t a = core(j);
            size_t b = core(j + 1);
            bool valid = tracked.has_edge(a, b) && neighborhoods_disjoint(tracked, a, b);
            tracking.require(valid);
            Graph next = valid ? tracked.edge_local_complement(a, b) : tracked;
            bool identity = valid && next == tracked;
            apply_logged(sv, log, Gate::h(a), stage, identity);
            apply_logged(sv, log, Gate::h(b), stage, identity);
            tracked = std::move(next);
        }
        check_tracked(stage);
    };

    for (size_t j = 0; j + 1 < n_logical; j++) {
        apply_logged(sv, log, Gate::cz(core(j), core(j + 1)), "core");
        tracked = tracked.toggle_edge(core(j), core(j + 1));
    }
    hadamard_round("hadamard_1");
    for (size_t j = 0; j < n_logical; j++) {
        LogicalRegister reg = LogicalRegister::block(j);
        for (size_t a : reg.ancillae) {
            apply_logged(sv, log, Gate::cz(reg.core, a), "ghz");
            tracked = tracked.toggle_edge(reg.core, a);
        }
    }
    hadamard_round("hadamard_2");

    ElcConstruction out{sv, {}, sv, tracked, tracked, {}};
    for (size_t j = 0; j < n_logical; j++) {
        LogicalRegister reg = LogicalRegister::block(j);
        pentagon(sv, reg, log);
        auto q = reg.qubits();
        for (size_t k = 0; k < q.size(); k++) {
            tracked = tracked.toggle_edge(q[k], q[(k + 1) % q.size()]);
        }
    }
    check_tracked("pentagon");

    tracking.details["steps"] = std::move(steps);
    out.state = std::move(sv);
    out.log = std::move(log);
    out.final_graph = std::move(tracked);
    out.tracking = std::move(tracking);
    return out;
}

Construction build_cs2_direct(size_t max_qubits) {
    return build_cluster_direct(2, max_qubits);
}

ElcConstruction build_cs2_elc(double tol, size_t max_qubits) {
    return build_cluster_elc(2, tol, max_qubits);
}

StateVector classically_encoded_pair(size_t max_qubits) {
    std::vector<QubitState> plus5(kBlockSize, QubitState::plus());
    std::vector<QubitState> minus5(kBlockSize, QubitState::minus());
    StateVector p = StateVector::product(plus5, max_qubits);
    StateVector m = StateVector::product(minus5, max_qubits);
    StateVector out = tensor(p, p + m, max_qubits) + tensor(m, p - m, max_qubits);
    out *= 0.5;
    return out;
}

Graph encoded_cluster_graph(size_t n_logical) {
    std::vector<Edge> edges;
    for (size_t j = 0; j < n_logical; j++) {
        auto q = LogicalRegister::block(j).qubits();
        for (size_t k = 0; k < q.size(); k++) {
            size_t a = q[k];
            size_t b = q[(k + 1) % q.size()];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    for (size_t j = 0; j + 1 < n_logical; j++) {
        for (size_t p : LogicalRegister::block(j).qubits()) {
            for (size_t q : LogicalRegister::block(j + 1).qubits()) {
                edges.emplace_back(p, q);
            }
        }
    }
    return Graph::from_edges(kBlockSize * n_logical, edges);
}

Report verify_cs2_equivalence(double tol, size_t max_qubits) {
    Construction direct = build_cs2_direct(max_qubits);
    ElcConstruction elc = build_cs2_elc(tol, max_qubits);
    double diff = max_abs_diff(direct.state, elc.state);
    double expansion_diff = max_abs_diff(elc.pre_pentagon, classically_encoded_pair(max_qubits));

    Report report;
    report.require(diff <= tol);
    report.require(expansion_diff <= tol);
    report.require(elc.tracking.passed);
    report.details["suite"] = "cs2";
    report.details["equal"] = diff <= tol;
    report.details["max_amp_diff"] = diff;
    report.details["pre_pentagon_expansion_diff"] = expansion_diff;
    report.details["direct_cz_count"] = direct.log.cz_count();
    report.details["direct_logical_cz_count"] = direct.log.cz_count("logical_cz");
    report.details["elc_cz_count"] = elc.log.cz_count();
    report.details["elc_hadamard_count"] = elc.log.hadamard_count();
    report.details["elc_identity_hadamard_count"] = elc.log.identity_hadamard_count();
    report.details["cz_savings"] = direct.log.cz_count() - elc.log.cz_count();
    report.details["pre_pentagon_edges"] = elc.pre_pentagon_graph.num_edges();
    report.details["tolerance"] = tol;
    return report;
}

ChainCore build_chain_core(size_t n_logical) {
    check_chain_length(n_logical);
    ChainCore out{Graph::path(n_logical), {}};
    for (size_t j = 0; j + 1 < n_logical; j++) {
        out.log.record(Gate::cz(j, j + 1), "core");
    }
    return out;
}

Report verify_chain_elc_steps(size_t n_logical, double tol, size_t max_qubits) {
    ChainCore chain = build_chain_core(n_logical);
    check_budget(n_logical, max_qubits);
    Graph g = chain.graph;
    StateVector sv = replay(chain.log, StateVector::plus(n_logical, max_qubits));

    Report report;
    report.require(equal_exact(sv, graph_state(g, max_qubits), tol));
    auto steps = nlohmann::ordered_json::array();
    for (size_t a = 0; a + 1 < n_logical; a += 2) {
        size_t b = a + 1;
        bool disjoint = g.has_edge(a, b) && neighborhoods_disjoint(g, a, b);
        report.require(disjoint);
        if (!disjoint) {
            break;
        }
        sv.apply(Gate::h(a));
        sv.apply(Gate::h(b));
        g = g.edge_local_complement(a, b);
        double diff = max_abs_diff(sv, graph_state(g, max_qubits));
        report.require(diff <= tol);
        steps.push_back({{"pair", {a, b}}, {"edges", edge_list(g)}, {"max_amp_diff", diff}});
    }
    if (n_logical == 4 && steps.size() == 2) {
        Graph inter = Graph::from_edges(4, {{0, 1}, {0, 2}, {2, 3}});
        Graph relabelled = Graph::from_edges(4, {{0, 1}, {0, 3}, {2, 3}});
        bool inter_ok = steps[0]["edges"] == edge_list(inter);
        bool relabelled_ok = steps[1]["edges"] == edge_list(relabelled);
        report.require(inter_ok && relabelled_ok);
        report.details["intermediate_matches"] = inter_ok;
        report.details["relabelled_chain_matches"] = relabelled_ok;
    }
    report.details["suite"] = "chain-steps";
    report.details["n_logical"] = n_logical;
    report.details["steps"] = std::move(steps);
    report.details["tolerance"] = tol;
    return report;
}

LogicalCluster build_logical_cluster(size_t n_logical, double tol, size_t max_qubits) {
    check_chain_length(n_logical);
    check_budget(kBlockSize * n_logical, max_qubits);
    ElcConstruction elc = build_cluster_elc(n_logical, tol, max_qubits);
    Construction direct = build_cluster_direct(n_logical, max_qubits);
    double diff = max_abs_diff(elc.state, direct.state);

    Graph classical_chain = encoded_cluster_graph(n_logical);
    for (size_t j = 0; j < n_logical; j++) {
        auto q = LogicalRegister::block(j).qubits();
        for (size_t k = 0; k < q.size(); k++) {
            classical_chain = classical_chain.toggle_edge(q[k], q[(k + 1) % q.size()]);
        }
    }

    Report report;
    report.require(diff <= tol);
    report.require(elc.tracking.passed);
    report.require(elc.pre_pentagon_graph == classical_chain);
    report.require(elc.final_graph == encoded_cluster_graph(n_logical));
    report.details["suite"] = "chain";
    report.details["n_logical"] = n_logical;
    report.details["qubits"] = kBlockSize * n_logical;
    report.details["equal"] = diff <= tol;
    report.details["max_amp_diff"] = diff;
    report.details["elc_cz_count"] = elc.log.cz_count();
    report.details["elc_hadamard_count"] = elc.log.hadamard_count();
    report.details["elc_identity_hadamard_count"] = elc.log.identity_hadamard_count();
    report.details["direct_cz_count"] = direct.log.cz_count();
    report.details["pre_pentagon_is_bipartite_chain"] = elc.pre_pentagon_graph == classical_chain;
    report.details["tracking"] = elc.tracking.details;
    report.details["tolerance"] = tol;
    return {std::move(elc.state), std::move(elc.log), std::move(report)};
}

nlohmann::ordered_json construction_summary(std::string_view construction, size_t n_logical, const CircuitLog &log,
                                            bool equal_to_reference, double max_amp_diff) {
    nlohmann::ordered_json out;
    out["construction"] = construction;
    out["n_logical"] = n_logical;
    out["cz_count"] = log.cz_count();
    out["hadamard_count"] = log.hadamard_count();
    out["equal_to_reference"] = equal_to_reference;
    out["max_amp_diff"] = max_amp_diff;
    return out;
}

}  // namespace gselc
