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

#include <gtest/gtest.h>

using namespace gselc;

TEST(Rng, BelowStaysInRange) {
    Rng rng(7);
    for (uint64_t bound : {1, 2, 3, 10, 1000}) {
        for (int k = 0; k < 200; k++) {
            EXPECT_LT(rng.below(bound), bound);
        }
    }
    EXPECT_EQ(Rng(3).below(1), 0u);
}

TEST(Rng, SeedDeterminesGraphs) {
    Rng a(11), b(11), c(12);
    bool any_difference = false;
    for (int k = 0; k < 10; k++) {
        Graph ga = random_graph(a, 7);
        EXPECT_EQ(ga, random_graph(b, 7));
        any_difference = any_difference || !(ga == random_graph(c, 7));
    }
    EXPECT_TRUE(any_difference);
}

TEST(ForEachGraph, CountsLabelledGraphs) {
    const size_t expected[] = {1, 1, 2, 8, 64};
    for (size_t n = 0; n < 5; n++) {
        size_t count = 0;
        for_each_graph(n, [&](const Graph &) { count++; });
        EXPECT_EQ(count, expected[n]);
    }
}

TEST(Suites, JoinedCoresIsReproducible) {
    SuiteOptions opts;
    opts.trials = 25;
    opts.seed = 5;
    Report first = run_theorem1_suite(opts);
    Report second = run_theorem1_suite(opts);
    EXPECT_TRUE(first.passed);
    EXPECT_EQ(first.details["cases"].size(), 25u);
    EXPECT_EQ(first.details.dump(), second.details.dump());
}

TEST(Suites, StabilizersAndVertexLc) {
    SuiteOptions opts;
    opts.trials = 10;
    EXPECT_TRUE(run_stabilizer_suite(opts).passed);
    Report lc = run_vertex_lc_exhaustive(opts, 4);
    EXPECT_TRUE(lc.passed);
    EXPECT_EQ(lc.details["failures"].get<size_t>(), 0u);
}

TEST(Suites, GraphIdentities) {
    Report r = run_graph_identity_suite(4);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.details["graphs"].get<size_t>(), 1u + 1 + 2 + 8 + 64);
}

TEST(Suites, SharedNeighborhoodSearchRecordsOutcome) {
    SuiteOptions opts;
    opts.trials = 20;
    Report r = search_shared_neighborhood(opts);
    EXPECT_TRUE(r.passed);
    size_t examined = r.details["examined"].get<size_t>();
    EXPECT_EQ(examined, 20u);
    EXPECT_EQ(r.details["equal_exact"].get<size_t>() + r.details["equal_up_to_phase_only"].get<size_t>() +
                  r.details["unequal"].get<size_t>(),
              examined);
}
