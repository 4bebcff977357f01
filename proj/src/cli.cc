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

#include "gselc/cli.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gselc/error.h"
#include "gselc/graph_io.h"
#include "gselc/logical_encoding.h"
#include "gselc/oracle.h"
#include "gselc/suites.h"

namespace gselc {

namespace {

struct Config {
    size_t max_qubits = kDefaultMaxQubits;
    double tol_equal = kStateTolerance;
    uint64_t seed = 0;
    std::string output_format = "json";
};

size_t parse_count(std::string_view text, std::string_view what) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::string read_text(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph read_graph(const std::string &path) {
    return graph_from_json(read_text(path));
}

std::string render_graph(const Graph &g, const std::string &format) {
    if (format == "dot") {
        return graph_to_dot(g);
    }
    if (format == "text") {
        std::ostringstream out;
        out << "n " << g.num_vertices() << "\n";
        for (const auto &[a, b] : g.edges()) {
            out << a << " " << b << "\n";
        }
        return out.str();
    }
    return graph_to_json(g) + "\n";
}

std::string render_report(const std::string &name, const Report &report, const std::string &format) {
    if (format == "text") {
        std::ostringstream out;
        out << (report.passed ? "PASS" : "FAIL") << " " << name;
        for (const auto &[key, value] : report.details.items()) {
            if (value.is_primitive()) {
                out << " " << key << "=" << value.dump();
            }
        }
        out << "\n";
        return out.str();
    }
    nlohmann::ordered_json doc;
    doc["suite"] = name;
    doc["passed"] = report.passed;
    doc["details"] = report.details;
    return doc.dump(2) + "\n";
}

struct ApplyStep {
    std::string op;
    std::string step;
    Graph graph;
};

std::vector<ApplyStep> apply_op(const Graph &g, const std::string &op) {
    auto colon = op.find(':');
    if (colon == std::string::npos) {
        throw Error(ErrorKind::ParseError, "operation '" + op + "' must be lc:V or elc:A,B");
    }
    std::string kind = op.substr(0, colon);
    std::string args = op.substr(colon + 1);
    if (kind == "lc") {
        size_t v = parse_count(args, "vertex");
        return {{op, "lc:" + std::to_string(v), g.local_complement(v)}};
    }
    if (kind == "elc") {
        auto comma = args.find(',');
        if (comma == std::string::npos) {
            throw Error(ErrorKind::ParseError, "elc needs two vertices, got '" + args + "'");
        }
        size_t a = parse_count(std::string_view(args).substr(0, comma), "vertex");
        size_t b = parse_count(std::string_view(args).substr(comma + 1), "vertex");
        // Validates the edge before any LC is traced.
        Graph result = g.edge_local_complement(a, b);
        Graph s1 = g.local_complement(a);
        Graph s2 = s1.local_complement(b);
        Graph s3 = s2.local_complement(a);
        if (!(s3 == result)) {
            throw std::logic_error("direct ELC disagrees with LC composition");
        }
        return {{op, "lc:" + std::to_string(a), s1}, {op, "lc:" + std::to_string(b), s2},
                {op, "lc:" + std::to_string(a), s3}};
    }
    throw Error(ErrorKind::ParseError, "unknown operation '" + kind + "'");
}

Report run_suite(const std::string &suite, const Config &config, std::optional<size_t> trials) {
    SuiteOptions options;
    options.seed = config.seed;
    options.tol = config.tol_equal;
    options.max_qubits = config.max_qubits;
    if (suite == "theorem1") {
        options.trials = trials.value_or(200);
        return run_theorem1_suite(options);
    }
    if (suite == "stabilizers") {
        options.trials = trials.value_or(50);
        return run_stabilizer_suite(options);
    }
    if (suite == "vertex-lc") {
        return run_vertex_lc_exhaustive(options);
    }
    if (suite == "graph-identities") {
        return run_graph_identity_suite();
    }
    if (suite == "shared-neighborhood") {
        options.trials = trials.value_or(100);
        return search_shared_neighborhood(options);
    }
    if (suite == "cs2") {
        return verify_cs2_equivalence(config.tol_equal, config.max_qubits);
    }
    if (suite.rfind("chain:", 0) == 0) {
        size_t n = parse_count(std::string_view(suite).substr(6), "chain length");
        Report steps = verify_chain_elc_steps(n, config.tol_equal, config.max_qubits);
        Report full = build_logical_cluster(n, config.tol_equal, config.max_qubits).report;
        Report combined;
        combined.require(steps.passed);
        combined.require(full.passed);
        combined.details["suite"] = suite;
        combined.details["core_steps"] = steps.details;
        combined.details["logical_cluster"] = full.details;
        return combined;
    }
    throw Error(ErrorKind::ParseError, "unknown suite '" + suite + "'");
}

}  // namespace

Graph graph_from_spec(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorKind::ParseError, "graph spec '" + std::string(spec) + "' must look like kind:ARG");
    }
    std::string_view kind = spec.substr(0, colon);
    std::string_view arg = spec.substr(colon + 1);
    if (kind == "file") {
        return read_graph(std::string(arg));
    }
    size_t n = parse_count(arg, "size");
    if (kind == "star") {
        return Graph::star(n);
    }
    if (kind == "cycle") {
        return Graph::cycle(n);
    }
    if (kind == "path") {
        return Graph::path(n);
    }
    if (kind == "empty") {
        return Graph::empty(n);
    }
    throw Error(ErrorKind::ParseError, "unknown graph kind '" + std::string(kind) + "'");
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            std::optional<std::string> env_max_qubits) {
    CLI::App app{"Graph states, local and edge local complementation, and logical cluster states", "gselc"};
    app.require_subcommand(1);
    app.fallthrough();

    Config config;
    std::optional<size_t> max_qubits_flag;
    std::optional<size_t> trials;
    std::string out_path;
    app.add_option("--max-qubits", max_qubits_flag, "Largest state vector the oracle may allocate")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol", config.tol_equal, "State equality tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "Seed for randomized suites");
    app.add_option("--trials", trials, "Number of randomized cases");
    app.add_option("--format", config.output_format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--out", out_path, "Write output to PATH instead of stdout");

    std::string spec;
    auto *graph_cmd = app.add_subcommand("graph", "Construct a graph: star:N, cycle:N, path:N, empty:N, file:PATH");
    graph_cmd->add_option("spec", spec)->required();

    std::string graph_path;
    std::vector<std::string> ops;
    bool trace = false;
    auto *apply_cmd = app.add_subcommand("apply", "Apply lc:V and elc:A,B operations to a graph file");
    apply_cmd->add_option("graph", graph_path, "Graph JSON file, or - for stdin")->required();
    apply_cmd->add_option("ops", ops, "Operations, applied left to right")->required();
    apply_cmd->add_flag("--trace", trace, "Emit every intermediate local complementation");

    std::string suite;
    auto *verify_cmd = app.add_subcommand(
        "verify", "Run a suite: theorem1, vertex-lc, stabilizers, cs2, chain:N, graph-identities, shared-neighborhood");
    verify_cmd->add_option("suite", suite)->required();

    size_t n_logical = 2;
    std::string construction = "elc";
    std::string dump_state;
    auto *encode_cmd = app.add_subcommand("encode", "Build a logical cluster state and report gate counts");
    encode_cmd->add_option("--n-logical", n_logical, "Number of logical qubits");
    encode_cmd->add_option("--construction", construction)->check(CLI::IsMember({"direct", "elc"}));
    encode_cmd->add_option("--dump-state", dump_state, "Write the final amplitudes as CSV");

    std::string export_path;
    auto *export_cmd = app.add_subcommand("export", "Serialize a graph file as DOT or JSON");
    export_cmd->add_option("graph", export_path, "Graph JSON file, or - for stdin")->required();

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    std::string output;
    int status = kExitPass;
    try {
        if (max_qubits_flag) {
            config.max_qubits = *max_qubits_flag;
        } else if (env_max_qubits) {
            config.max_qubits = parse_count(*env_max_qubits, "GSELC_MAX_QUBITS");
            if (config.max_qubits == 0) {
                throw Error(ErrorKind::ParseError, "GSELC_MAX_QUBITS must be at least 1");
            }
        }

        if (graph_cmd->parsed()) {
            output = render_graph(graph_from_spec(spec), config.output_format);
        } else if (apply_cmd->parsed()) {
            Graph g = read_graph(graph_path);
            auto steps = nlohmann::ordered_json::array();
            for (const auto &op : ops) {
                for (auto &step : apply_op(g, op)) {
                    steps.push_back({{"op", step.op},
                                     {"step", step.step},
                                     {"graph", nlohmann::ordered_json::parse(graph_to_json(step.graph))}});
                    g = std::move(step.graph);
                }
            }
            if (trace && config.output_format == "json") {
                nlohmann::ordered_json doc;
                doc["trace"] = std::move(steps);
                doc["result"] = nlohmann::ordered_json::parse(graph_to_json(g));
                output = doc.dump() + "\n";
            } else {
                output = render_graph(g, config.output_format);
            }
        } else if (verify_cmd->parsed()) {
            Report report = run_suite(suite, config, trials);
            output = render_report(suite, report, config.output_format);
            status = report.passed ? kExitPass : kExitVerificationFailed;
        } else if (encode_cmd->parsed()) {
            Construction direct = build_cluster_direct(n_logical, config.max_qubits);
            ElcConstruction elc = build_cluster_elc(n_logical, config.tol_equal, config.max_qubits);
            double diff = max_abs_diff(direct.state, elc.state);
            bool equal = diff <= config.tol_equal;
            const bool is_direct = construction == "direct";
            const CircuitLog &log = is_direct ? direct.log : elc.log;
            output = construction_summary(construction, n_logical, log, equal, diff).dump() + "\n";
            if (!dump_state.empty()) {
                std::ofstream csv(dump_state);
                if (!csv) {
                    throw Error(ErrorKind::ParseError, "cannot write '" + dump_state + "'");
                }
                csv << (is_direct ? direct.state : elc.state).to_csv();
            }
            status = equal ? kExitPass : kExitVerificationFailed;
        } else if (export_cmd->parsed()) {
            std::string format = config.output_format == "text" ? "json" : config.output_format;
            output = render_graph(read_graph(export_path), format);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot write '" << out_path << "'\n";
            return kExitUsage;
        }
        file << output;
    } else {
        out << output;
    }
    return status;
}

}  // namespace gselc
