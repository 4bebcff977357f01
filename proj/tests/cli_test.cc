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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "gselc/graph_io.h"
#include "json.hpp"

using namespace gselc;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
    args.insert(args.begin(), "gselc");
    std::ostringstream out, err;
    int code = run_cli(args, out, err, env);
    return {code, out.str(), err.str()};
}

std::string write_graph(const std::string &name, const Graph &g) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << graph_to_json(g);
    return path;
}

Graph joined_stars() {
    Graph g = disjoint_union(Graph::star(4), Graph::star(4));
    g = g.toggle_edge(0, 5);
    return g;
}

}  // namespace

TEST(Cli, GraphSpecs) {
    EXPECT_EQ(run({"graph", "star:4"}).out, "{\"n\":5,\"edges\":[[0,1],[0,2],[0,3],[0,4]]}\n");
    Result c5 = run({"graph", "cycle:5"});
    EXPECT_EQ(c5.code, kExitPass);
    EXPECT_EQ(graph_from_json(c5.out), Graph::cycle(5));
    EXPECT_EQ(run({"--format", "text", "graph", "path:3"}).out, "n 3\n0 1\n1 2\n");
    EXPECT_EQ(run({"graph", "path:0"}).out, "{\"n\":0,\"edges\":[]}\n");
    EXPECT_EQ(graph_from_spec("empty:3"), Graph::empty(3));
}

TEST(Cli, ApplyElcOnPath) {
    std::string path = write_graph("p4.json", Graph::path(4));
    Result r = run({"apply", path, "elc:1,2"});
    EXPECT_EQ(r.code, kExitPass) << r.err;
    EXPECT_EQ(r.out, "{\"n\":4,\"edges\":[[0,2],[0,3],[1,2],[1,3]]}\n");

    Result twice = run({"apply", path, "lc:0", "lc:0"});
    EXPECT_EQ(graph_from_json(twice.out), Graph::path(4));
}

TEST(Cli, TraceListsThreeLocalComplementations) {
    std::string path = write_graph("stars.json", joined_stars());
    Result r = run({"apply", path, "elc:0,5", "--trace"});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["trace"].size(), 3u);
    EXPECT_EQ(doc["trace"][0]["step"], "lc:0");
    EXPECT_EQ(doc["trace"][1]["step"], "lc:5");
    EXPECT_EQ(doc["trace"][2]["step"], "lc:0");
    EXPECT_EQ(graph_from_json(doc["result"].dump()).num_edges(), 25u);
    EXPECT_EQ(doc["trace"][2]["graph"], doc["result"]);
}

TEST(Cli, ApplyRejectsNonEdge) {
    std::string path = write_graph("p4b.json", Graph::path(4));
    Result r = run({"apply", path, "elc:0,2"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("NotAnEdge"), std::string::npos);
}

TEST(Cli, VerifyCs2) {
    Result r = run({"verify", "cs2"});
    ASSERT_EQ(r.code, kExitPass) << r.out << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["passed"].get<bool>());
    EXPECT_EQ(doc["details"]["direct_cz_count"], 35);
    EXPECT_EQ(doc["details"]["direct_logical_cz_count"], 25);
    EXPECT_EQ(doc["details"]["elc_cz_count"], 19);
    EXPECT_EQ(doc["details"]["elc_hadamard_count"], 2);
}

TEST(Cli, VerifySuitesAreDeterministic) {
    Result a = run({"--seed", "3", "--trials", "10", "verify", "theorem1"});
    Result b = run({"--seed", "3", "--trials", "10", "verify", "theorem1"});
    EXPECT_EQ(a.code, kExitPass);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"--format", "text", "verify", "graph-identities"}).out.substr(0, 4), "PASS");
}

TEST(Cli, ExportDot) {
    std::string path = write_graph("k55.json", joined_stars().edge_local_complement(0, 5));
    Result r = run({"--format", "dot", "export", path});
    ASSERT_EQ(r.code, kExitPass);
    size_t edges = 0;
    for (size_t pos = r.out.find(" -- "); pos != std::string::npos; pos = r.out.find(" -- ", pos + 1)) {
        edges++;
    }
    EXPECT_EQ(edges, 25u);
    EXPECT_EQ(r.out.rfind("graph G {", 0), 0u);
}

TEST(Cli, JsonRoundTrip) {
    Graph g = joined_stars();
    std::string path = write_graph("round.json", g);
    Result r = run({"export", path});
    EXPECT_EQ(graph_from_json(r.out), g);
    EXPECT_EQ(r.out, graph_to_json(g) + "\n");
}

TEST(Cli, Encode) {
    Result r = run({"encode", "--n-logical", "2", "--construction", "elc"});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["cz_count"], 19);
    EXPECT_EQ(doc["hadamard_count"], 2);
    EXPECT_TRUE(doc["equal_to_reference"].get<bool>());

    std::string csv = ::testing::TempDir() + "cs2.csv";
    Result direct = run({"encode", "--construction", "direct", "--dump-state", csv});
    EXPECT_EQ(nlohmann::json::parse(direct.out)["cz_count"], 35);
    std::ifstream in(csv);
    size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        lines++;
    }
    EXPECT_EQ(lines, 1024u);
}

TEST(Cli, ExitCodesAndQubitBudget) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"graph", "cycle:2"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "chain:3"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "no-such-suite"}).code, kExitUsage);

    Result flag = run({"--max-qubits", "9", "verify", "cs2"});
    EXPECT_EQ(flag.code, kExitUsage);
    EXPECT_NE(flag.err.find("TooLarge"), std::string::npos);
    EXPECT_EQ(run({"verify", "cs2"}, "9").code, kExitUsage);
    // The flag wins over the environment.
    EXPECT_EQ(run({"--max-qubits", "10", "verify", "cs2"}, "9").code, kExitPass);
    EXPECT_EQ(run({"verify", "cs2"}, "zero").code, kExitUsage);
}
