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

#include <cmath>
#include <map>

#include "rvm/stats.h"
#include "rvm/topology.h"
#include "test_util.h"

namespace rvm {
namespace {

TEST(RandomBipartite, StarAndTreeExtremes) {
    BipartiteInstance star = gen_random_bipartite(1, 6, 6, 3);
    EXPECT_EQ(star.graph.degree(0), 6u);
    EXPECT_EQ(star.graph.num_edges(), 6u);
    BipartiteInstance tree = gen_random_bipartite(25, 25, 49, 3);
    EXPECT_EQ(tree.graph.num_edges(), 49u);
    EXPECT_TRUE(tree.graph.is_connected());
    EXPECT_THROW(gen_random_bipartite(25, 25, 48, 3), ValidationError);
    EXPECT_THROW(gen_random_bipartite(25, 25, 626, 3), ValidationError);
    EXPECT_THROW(gen_random_bipartite(0, 5, 4, 3), ValidationError);
    EXPECT_EQ(bipartite_edge_range(10, 40), std::make_pair(std::size_t{49}, std::size_t{400}));
}

TEST(RandomBipartite, DrawsAreValidAndEdgeSlotsUniform) {
    constexpr std::size_t n1 = 20, n2 = 30, m = 150, draws = 1000;
    std::vector<std::size_t> hits(n1 * n2, 0);
    for (std::size_t s = 0; s < draws; s++) {
        BipartiteInstance inst = gen_random_bipartite(n1, n2, m, s);
        ASSERT_EQ(inst.graph.num_edges(), m);
        ASSERT_TRUE(inst.graph.is_connected());
        ASSERT_EQ(inst.bipartition.part(Side::kFirst).size(), n1);
        for (const Edge &e : inst.graph.edges()) {
            Vertex u = std::min(e.first, e.second), v = std::max(e.first, e.second);
            ASSERT_LT(u, n1);
            ASSERT_GE(v, n1);
            hits[u * n2 + (v - n1)]++;
        }
    }
    // Every slot has the same marginal m/(n1 n2) by relabeling symmetry.
    double p = static_cast<double>(m) / (n1 * n2);
    double sigma = std::sqrt(draws * p * (1 - p));
    std::size_t beyond3 = 0;
    double worst = 0;
    for (std::size_t h : hits) {
        double z = std::abs(static_cast<double>(h) - draws * p) / sigma;
        beyond3 += z > 3;
        worst = std::max(worst, z);
    }
    EXPECT_LE(beyond3, hits.size() / 100);
    EXPECT_LT(worst, 5.0);
}

TEST(RandomBipartite, SeedDeterminism) {
    EXPECT_EQ(gen_random_bipartite(10, 12, 40, 9).graph, gen_random_bipartite(10, 12, 40, 9).graph);
    EXPECT_NE(gen_random_bipartite(10, 12, 40, 9).graph, gen_random_bipartite(10, 12, 40, 10).graph);
}

TEST(Families, NamesRoundTrip) {
    for (Family f : {Family::kRandomBipartite, Family::kBarabasiAlbert, Family::kAsLike, Family::kPpiLike,
                     Family::kBipartiteNet}) {
        EXPECT_EQ(parse_family(to_string(f)), f);
    }
    EXPECT_EQ(parse_family("ba"), Family::kBarabasiAlbert);
    EXPECT_THROW(parse_family("lattice"), ValidationError);
}

TEST(BarabasiAlbert, EdgeArithmetic) {
    for (std::size_t k = 1; k <= 5; k++) {
        InternetParams p{Family::kBarabasiAlbert, 50, k};
        Graph g = gen_internet_like(p, 17);
        EXPECT_EQ(g.num_vertices(), 50u);
        EXPECT_EQ(g.num_edges(), k * (50 - k) + k * (k - 1) / 2);
        EXPECT_TRUE(g.is_connected());
    }
    EXPECT_THROW(gen_internet_like({Family::kBarabasiAlbert, 50, 0}, 1), ValidationError);
    EXPECT_THROW(gen_internet_like({Family::kBarabasiAlbert, 2, 1}, 1), ValidationError);
}

TEST(BarabasiAlbert, TailExponentNearThree) {
    std::map<std::size_t, double> counts;
    double total = 0;
    for (std::uint64_t seed = 0; seed < 50; seed++) {
        Graph g = gen_internet_like({Family::kBarabasiAlbert, 2000, 2}, seed);
        g.vertices().for_each([&](Vertex v) { counts[g.degree(v)] += 1; });
        total += 2000;
    }
    // Complementary CDF falls as k^(1 - gamma).
    std::vector<double> ks, tail;
    double above = total;
    for (auto [k, c] : counts) {
        if (k >= 4 && k <= 60) {
            ks.push_back(static_cast<double>(k));
            tail.push_back(above / total);
        }
        above -= c;
    }
    double gamma = 1.0 - log_log_slope(ks, tail);
    EXPECT_NEAR(gamma, 3.0, 0.5);
}

TEST(InternetLike, TargetsMetAndConnected) {
    for (Family f : {Family::kAsLike, Family::kPpiLike, Family::kBipartiteNet}) {
        for (std::size_t m : {50u, 125u, 200u}) {
            for (std::uint64_t seed = 0; seed < 10; seed++) {
                Graph g = gen_internet_like({f, 50, m}, seed);
                EXPECT_EQ(g.num_vertices(), 50u);
                EXPECT_TRUE(g.is_connected());
                EXPECT_EQ(g.num_edges(), m) << to_string(f);
            }
        }
    }
    EXPECT_TRUE(is_bipartite(gen_internet_like({Family::kBipartiteNet, 50, 100}, 1)));
    EXPECT_THROW(gen_internet_like({Family::kAsLike, 50, 10}, 1), ValidationError);
    EXPECT_THROW(gen_internet_like({Family::kRandomBipartite, 50, 60}, 1), ValidationError);
}

TEST(Subgraph, BipartiteInputReturnedWhole) {
    BipartiteInstance inst = gen_random_bipartite(6, 7, 20, 4);
    SubgraphExtraction s = extract_bipartite_subgraph(inst.graph, 13, 8);
    EXPECT_EQ(s.graph, inst.graph);
    for (Vertex v = 0; v < 13; v++) {
        EXPECT_EQ(s.original_ids[v], v);
    }
}

TEST(Subgraph, TriangleHasNoBipartiteTriple) {
    Graph tri = testing::cycle(3);
    EXPECT_THROW(extract_bipartite_subgraph(tri, 3, 1), ValidationError);
    EXPECT_NO_THROW(extract_bipartite_subgraph(tri, 2, 1));
}

TEST(Subgraph, ResultsAreInducedConnectedBipartite) {
    std::size_t successes = 0;
    for (std::uint64_t seed = 0; seed < 100; seed++) {
        Graph g = gen_internet_like({Family::kPpiLike, 50, 100}, seed);
        try {
            SubgraphExtraction s = extract_bipartite_subgraph(g, 30, seed);
            successes++;
            ASSERT_EQ(s.graph.num_vertices(), 30u);
            EXPECT_TRUE(s.graph.is_connected());
            EXPECT_NO_THROW(refresh_bipartition(s.graph, s.bipartition.part_of));
            for (Vertex i = 0; i < 30; i++) {
                for (Vertex j = i + 1; j < 30; j++) {
                    EXPECT_EQ(s.graph.has_edge(i, j), g.has_edge(s.original_ids[i], s.original_ids[j]));
                }
                if (i > 0) {
                    EXPECT_LT(s.original_ids[i - 1], s.original_ids[i]);
                }
            }
        } catch (const ValidationError &) {
        }
    }
    std::cout << "ppi-like subgraph success: " << successes << "/100\n";
    EXPECT_GT(successes, 50u);
}

}  // namespace
}  // namespace rvm
