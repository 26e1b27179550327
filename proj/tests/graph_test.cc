// Copyright 2026 The remote-vm Authors
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

#include <gtest/gtest.h>

#include "rvm/graph.h"
#include "rvm/independence.h"
#include "test_util.h"

namespace rvm {
namespace {

using testing::make_graph;
using testing::set_of;

// Path a-b-c-d with P1 = {a, c}, P2 = {b, d}.
constexpr Vertex a = 0, b = 1, c = 2, d = 3;
const std::vector<std::uint8_t> kP4Labels{1, 2, 1, 2};

Graph p4() {
    return make_graph(4, {{a, b}, {b, c}, {c, d}});
}

TEST(VertexSet, AlgebraMatchesStdSets) {
    Rng rng(11);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t u = 1 + rng.below(150);
        VertexSet x(u), y(u);
        std::vector<bool> bx(u), by(u);
        for (Vertex v = 0; v < u; v++) {
            if (rng.bernoulli(0.4)) {
                x.insert(v);
                bx[v] = true;
            }
            if (rng.bernoulli(0.4)) {
                y.insert(v);
                by[v] = true;
            }
        }
        std::size_t inter = 0, uni = 0, diff = 0;
        bool subset = true;
        for (Vertex v = 0; v < u; v++) {
            inter += bx[v] && by[v];
            uni += bx[v] || by[v];
            diff += bx[v] && !by[v];
            subset = subset && (!bx[v] || by[v]);
        }
        EXPECT_EQ((x & y).size(), inter);
        EXPECT_EQ((x | y).size(), uni);
        EXPECT_EQ((x - y).size(), diff);
        EXPECT_EQ(x.is_subset_of(y), subset);
        EXPECT_EQ(x.intersects(y), inter > 0);
    }
}

TEST(Graph, LocalComplementOfPathCenterGivesTriangle) {
    Graph g = make_graph(3, {{0, 1}, {1, 2}});
    Graph t = local_complement(g, 1);
    EXPECT_TRUE(t.has_edge(0, 2));
    EXPECT_EQ(t.num_edges(), 3u);
}

TEST(Graph, LocalComplementAtLeafIsIdentity) {
    Graph g = p4();
    EXPECT_EQ(local_complement(g, a), g);
    EXPECT_EQ(local_complement(g, d), g);
}

TEST(Graph, LocalComplementIsInvolution) {
    Rng rng(3);
    for (int trial = 0; trial < 100; trial++) {
        Graph g = testing::random_graph(rng, 14, 0.35);
        Vertex v = static_cast<Vertex>(rng.below(14));
        Graph once = local_complement(g, v);
        EXPECT_EQ(local_complement(once, v), g);
        // Only pairs inside N(v) change.
        for (Vertex x = 0; x < 14; x++) {
            for (Vertex y = x + 1; y < 14; y++) {
                bool inside = g.has_edge(v, x) && g.has_edge(v, y);
                EXPECT_EQ(once.has_edge(x, y), inside ? !g.has_edge(x, y) : g.has_edge(x, y));
            }
        }
    }
}

TEST(Graph, UnknownVertexIsRejected) {
    Graph g = p4();
    EXPECT_THROW(local_complement(g, 9), ValidationError);
    Graph h = delete_vertices(g, set_of(4, {b}));
    EXPECT_THROW(local_complement(h, b), ValidationError);
    EXPECT_THROW(delete_vertices(h, set_of(4, {b})), ValidationError);
}

TEST(Graph, DeleteFromCycleLeavesPath) {
    // v1..v6 as ids 0..5; delete v4.
    Graph g = testing::cycle(6);
    Graph h = delete_vertices(g, set_of(6, {3}));
    EXPECT_EQ(h.num_vertices(), 5u);
    EXPECT_EQ(h.num_edges(), 4u);
    EXPECT_TRUE(h.has_edge(4, 5));
    EXPECT_TRUE(h.has_edge(5, 0));
    EXPECT_TRUE(h.has_edge(0, 1));
    EXPECT_TRUE(h.has_edge(1, 2));
    EXPECT_TRUE(h.is_connected());
}

TEST(Graph, DeleteEmptySetIsIdentity) {
    Graph g = p4();
    EXPECT_EQ(delete_vertices(g, g.empty_set()), g);
}

TEST(Graph, DeletionDegreeSumsMatchEdgeRecount) {
    Rng rng(5);
    for (int trial = 0; trial < 50; trial++) {
        Graph g = testing::random_graph(rng, 12, 0.4);
        std::vector<Vertex> ids{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
        rng.shuffle(ids);
        VertexSet gone = set_of(12, {ids[0], ids[1], ids[2]});
        Graph h = delete_vertices(g, gone);
        std::size_t recount = 0;
        for (Vertex u = 0; u < 12; u++) {
            for (Vertex v = u + 1; v < 12; v++) {
                recount += g.has_edge(u, v) && !gone.contains(u) && !gone.contains(v);
            }
        }
        std::size_t degree_sum = 0;
        h.vertices().for_each([&](Vertex v) { degree_sum += h.degree(v); });
        EXPECT_EQ(degree_sum, 2 * recount);
        EXPECT_EQ(h.num_edges(), recount);
    }
}

TEST(Graph, SelfLoopsAndBadIdsRejected) {
    std::vector<Edge> loop{{1, 1}};
    EXPECT_THROW(Graph::from_edges(3, loop), ValidationError);
    std::vector<Edge> out_of_range{{0, 7}};
    EXPECT_THROW(Graph::from_edges(3, out_of_range), ValidationError);
}

TEST(Bipartition, RefreshOnPath) {
    Graph g = p4();
    Bipartition bp = refresh_bipartition(g, kP4Labels);
    EXPECT_EQ(bp.star_set(Side::kFirst), set_of(4, {c}));
    EXPECT_EQ(bp.star_set(Side::kSecond), set_of(4, {b}));
    EXPECT_EQ(bp.non_star_set(Side::kFirst), set_of(4, {a}));
    EXPECT_EQ(bp.non_star_set(Side::kSecond), set_of(4, {d}));
}

TEST(Bipartition, CompleteBipartiteIsAllStars) {
    auto kb = testing::complete_bipartite(3, 4);
    Bipartition bp = refresh_bipartition(kb.graph, kb.labels);
    EXPECT_EQ(bp.star_set(Side::kFirst), bp.part(Side::kFirst));
    EXPECT_EQ(bp.star_set(Side::kSecond), bp.part(Side::kSecond));
    EXPECT_TRUE(bp.non_star_set(Side::kFirst).empty());
    EXPECT_TRUE(bp.non_star_set(Side::kSecond).empty());
    kb.graph.vertices().for_each(
        [&](Vertex v) { EXPECT_TRUE(opposite_remote_set(kb.graph, bp, v).empty()); });
}

TEST(Bipartition, IntraPartitionEdgeRejected) {
    Graph g = p4();
    std::vector<std::uint8_t> bad{1, 1, 2, 2};
    EXPECT_THROW(refresh_bipartition(g, bad), ValidationError);
}

TEST(Bipartition, TwoColoringRejectsOddCycle) {
    EXPECT_THROW(two_coloring(testing::cycle(5)), ValidationError);
    EXPECT_FALSE(is_bipartite(testing::cycle(5)));
    EXPECT_TRUE(is_bipartite(testing::cycle(6)));
}

TEST(RemoteSets, PathExamples) {
    Graph g = p4();
    Bipartition bp = refresh_bipartition(g, kP4Labels);
    EXPECT_EQ(opposite_remote_set(g, bp, a), set_of(4, {d}));
    EXPECT_TRUE(opposite_remote_set(g, bp, c).empty());
    EXPECT_EQ(remote_set_union(g, bp, set_of(4, {a})), set_of(4, {d}));
    EXPECT_EQ(remote_set_intersection(g, bp, set_of(4, {a})), set_of(4, {d}));
    EXPECT_EQ(remote_set_union(g, bp, set_of(4, {a, c})), set_of(4, {d}));
    EXPECT_TRUE(remote_set_intersection(g, bp, set_of(4, {a, c})).empty());
    EXPECT_THROW(remote_set_union(g, bp, g.empty_set()), ValidationError);
    EXPECT_THROW(remote_set_intersection(g, bp, g.empty_set()), ValidationError);
}

TEST(RemoteSets, MatchAdjacencyComplementAndFolds) {
    Rng rng(21);
    for (int trial = 0; trial < 100; trial++) {
        auto inst = testing::random_bipartite(rng, 7, 9, 0.5);
        Bipartition bp = refresh_bipartition(inst.graph, inst.labels);
        for (Vertex v = 0; v < 16; v++) {
            VertexSet expect(16);
            for (Vertex u = 0; u < 16; u++) {
                if (inst.labels[u] != inst.labels[v] && !inst.graph.has_edge(u, v)) {
                    expect.insert(u);
                }
            }
            EXPECT_EQ(opposite_remote_set(inst.graph, bp, v), expect);
        }
        VertexSet s(16);
        for (Vertex v = 0; v < 7; v++) {
            if (rng.bernoulli(0.5)) {
                s.insert(v);
            }
        }
        if (s.empty()) {
            continue;
        }
        VertexSet uni(16), inter = bp.part(Side::kSecond);
        s.for_each([&](Vertex v) {
            uni |= opposite_remote_set(inst.graph, bp, v);
            inter &= opposite_remote_set(inst.graph, bp, v);
        });
        EXPECT_EQ(remote_set_union(inst.graph, bp, s), uni);
        EXPECT_EQ(remote_set_intersection(inst.graph, bp, s), inter);
    }
}

TEST(RemoteSets, MixedPartitionsRejected) {
    Graph g = p4();
    Bipartition bp = refresh_bipartition(g, kP4Labels);
    EXPECT_THROW(remote_set_union(g, bp, set_of(4, {a, b})), ValidationError);
}

TEST(Independence, CycleAndEdge) {
    Graph g = testing::cycle(6);
    EXPECT_TRUE(is_independent_set(g, set_of(6, {0, 2, 4})));
    EXPECT_FALSE(is_independent_set(g, set_of(6, {0, 1})));
}

std::size_t exhaustive_alpha(const Graph &g) {
    std::size_t u = g.universe();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << u); mask++) {
        VertexSet s(u);
        bool ok = true;
        for (Vertex v = 0; v < u && ok; v++) {
            if ((mask >> v) & 1) {
                ok = g.has_vertex(v);
                s.insert(v);
            }
        }
        if (ok && is_independent_set(g, s)) {
            best = std::max(best, s.size());
        }
    }
    return best;
}

TEST(Independence, KonigAndBranchAndBoundMatchExhaustive) {
    Rng rng(8);
    for (int trial = 0; trial < 60; trial++) {
        auto inst = testing::random_bipartite(rng, 1 + rng.below(8), 1 + rng.below(8), 0.4);
        Bipartition bp = refresh_bipartition(inst.graph, inst.labels);
        std::size_t truth = exhaustive_alpha(inst.graph);
        EXPECT_EQ(independence_number_bipartite(inst.graph, bp), truth);
        EXPECT_EQ(independence_number_branch_and_bound(inst.graph), truth);
        EXPECT_LE(independence_number_greedy(inst.graph), truth);
    }
    for (int trial = 0; trial < 40; trial++) {
        Graph g = testing::random_graph(rng, 13, 0.3);
        EXPECT_EQ(independence_number_branch_and_bound(g), exhaustive_alpha(g));
    }
}

}  // namespace
}  // namespace rvm
