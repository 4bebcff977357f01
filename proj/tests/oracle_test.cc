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

#include <gtest/gtest.h>

#include <cmath>

#include "dense_reference.h"
#include "gselc/error.h"

using namespace gselc;
namespace ref = gselc::testing;

namespace {

std::vector<ref::Cx> dense_graph_state(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<ref::Cx> v(size_t{1} << n, std::pow(2.0, -0.5 * static_cast<double>(n)));
    for (auto [a, b] : g.edges()) {
        v = ref::apply(ref::cz_matrix(a, b, n), v);
    }
    return v;
}

}  // namespace

TEST(JoinedCores, SingleVertices) {
    Report r = verify_theorem1(Graph::empty(1), 0, Graph::empty(1), 0);
    EXPECT_TRUE(r.passed);
    EXPECT_LE(r.details["max_amp_diff"].get<double>(), kStateTolerance);
}

TEST(JoinedCores, JoinedStarsGiveCompleteBipartite) {
    Report r = verify_theorem1(Graph::star(4), 0, Graph::star(4), 0);
    EXPECT_TRUE(r.passed) << r.details.dump();

    Graph joined = disjoint_union(Graph::star(4), Graph::star(4));
    joined = joined.toggle_edge(0, 5);
    Graph elc = joined.edge_local_complement(0, 5);
    EXPECT_EQ(elc.num_edges(), 25u);
    EXPECT_TRUE(is_complete_bipartite(elc, VertexSet(10, {0, 1, 2, 3, 4}), VertexSet(10, {5, 6, 7, 8, 9})));
}

TEST(JoinedCores, PathEndpoints) {
    // Two 3-paths joined at endpoints 0 and 3: ELC adds 1-4, 0-4 and 1-3.
    Report r = verify_theorem1(Graph::path(3), 0, Graph::path(3), 0);
    EXPECT_TRUE(r.passed) << r.details.dump();
    Graph joined = disjoint_union(Graph::path(3), Graph::path(3));
    joined = joined.toggle_edge(0, 3);
    EXPECT_EQ(joined.edge_local_complement(0, 3).num_edges(), 6u);
}

TEST(JoinedCores, RejectsBadInput) {
    EXPECT_THROW(verify_theorem1(Graph::empty(1), 1, Graph::empty(1), 0), Error);
    EXPECT_THROW(verify_theorem1(Graph::complete(11), 0, Graph::complete(10), 0), Error);
}

TEST(VertexLc, PathCentreAgainstDenseMatrices) {
    Graph p3 = Graph::path(3);
    Report r = verify_vertex_lc(p3, 1);
    ASSERT_TRUE(r.passed) << r.details.dump();
    EXPECT_EQ(r.details["z_corrections"], nlohmann::ordered_json::parse("[0,2]"));

    const double s = 1.0 / std::sqrt(2.0);
    const ref::Cx i{0.0, 1.0};
    ref::Matrix root_x = ref::matrix2(-s, i * s, i * s, -s);
    ref::Matrix root_z = ref::matrix2((i + 1.0) * s, 0, 0, (i - 1.0) * s);
    ref::Matrix z = ref::matrix2(1, 0, 0, -1);
    auto v = dense_graph_state(p3);
    v = ref::apply(ref::embed(root_x, 1, 3), v);
    v = ref::apply(ref::embed(root_z, 0, 3), v);
    v = ref::apply(ref::embed(root_z, 2, 3), v);
    v = ref::apply(ref::embed(z, 0, 3), v);
    v = ref::apply(ref::embed(z, 2, 3), v);
    auto target = dense_graph_state(p3.local_complement(1));
    ASSERT_EQ(p3.local_complement(1).num_edges(), 3u);

    ref::Cx phase = v[0] / target[0];
    EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
    for (size_t k = 0; k < v.size(); k++) {
        EXPECT_LE(std::abs(v[k] - phase * target[k]), 1e-12);
    }
}

TEST(VertexLc, SmallGraphs) {
    for (const Graph &g : {Graph::star(3), Graph::cycle(5), Graph::complete(4), Graph::path(5)}) {
        for (size_t a = 0; a < g.num_vertices(); a++) {
            EXPECT_TRUE(verify_vertex_lc(g, a).passed);
        }
    }
}

TEST(Stabilizers, Examples) {
    EXPECT_TRUE(verify_stabilizers(Graph::empty(3)).passed);
    Report c5 = verify_stabilizers(Graph::cycle(5));
    EXPECT_TRUE(c5.passed);
    EXPECT_EQ(c5.details["generators"].get<size_t>(), 5u);
    Graph g = Graph::from_edges(6, {{0, 1}, {0, 3}, {1, 2}, {2, 5}, {3, 4}, {4, 5}, {1, 4}});
    EXPECT_TRUE(verify_stabilizers(g).passed);
}

TEST(Ghz, StarsRotateToGhz) {
    for (size_t leaves : {1, 2, 4}) {
        Report r = ghz_amplitude_check(leaves);
        EXPECT_TRUE(r.passed) << r.details.dump();
        EXPECT_LE(r.details["ghz_max_diff"].get<double>(), kGateTolerance);
    }
}

TEST(HadamardPair, DisjointNeighborhoodsMatchElc) {
    Graph joined = disjoint_union(Graph::star(2), Graph::path(3));
    joined = joined.toggle_edge(0, 3);
    HadamardPairOutcome out = compare_hadamard_pair_with_elc(joined, 0, 3);
    EXPECT_TRUE(out.neighborhoods_disjoint);
    EXPECT_TRUE(out.equal_exact);
    EXPECT_LE(out.max_amp_diff, kStateTolerance);
}

TEST(HadamardPair, TriangleIsNotPlainHadamards) {
    HadamardPairOutcome out = compare_hadamard_pair_with_elc(Graph::complete(3), 0, 1);
    EXPECT_FALSE(out.neighborhoods_disjoint);
    EXPECT_FALSE(out.equal_exact);
}
