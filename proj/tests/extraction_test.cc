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

#include <algorithm>
#include <numeric>

#include "rvm/conditions.h"
#include "rvm/extraction.h"
#include "rvm/oracle.h"
#include "test_util.h"

namespace rvm {
namespace {

using testing::make_graph;
using testing::set_of;

struct Instance {
    Graph graph;
    Bipartition bipartition;
};

Instance p4() {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    return {g, refresh_bipartition(g, std::vector<std::uint8_t>{1, 2, 1, 2})};
}

Instance from(const testing::Bip &bip) {
    return {bip.graph, refresh_bipartition(bip.graph, bip.labels)};
}

// Random connected bipartite instance with n1 + n2 vertices.
Instance connected_bipartite(Rng &rng, std::size_t n1, std::size_t n2) {
    while (true) {
        auto bip = testing::random_bipartite(rng, n1, n2, 0.25 + 0.6 * rng.uniform());
        if (bip.graph.is_connected()) {
            return from(bip);
        }
    }
}

// P1 = {s, x, w, y, z}, P2 = {t, p1, p2, p3, p4, p5} with s, t stars and
// remote sets x:{p1}, w:{p2,p3}, y:{p1,p3,p4}, z:{p1,p5}. Starting from
// {x, w}, y dominates x and overlaps w; swapping x for y frees p1 so z can
// then be added after trimming.
constexpr Vertex kS = 0, kX = 1, kW = 2, kY = 3, kZ = 4, kT = 5, kP1 = 6, kP2 = 7, kP3 = 8, kP4 = 9, kP5 = 10;

Instance swap_instance() {
    Graph g(11);
    std::vector<std::uint8_t> labels{1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
    auto connect_except = [&](Vertex v, std::initializer_list<Vertex> remote) {
        for (Vertex u = kT; u <= kP5; u++) {
            if (std::find(remote.begin(), remote.end(), u) == remote.end()) {
                g.add_edge(v, u);
            }
        }
    };
    connect_except(kS, {});
    connect_except(kX, {kP1});
    connect_except(kW, {kP2, kP3});
    connect_except(kY, {kP1, kP3, kP4});
    connect_except(kZ, {kP1, kP5});
    return {g, refresh_bipartition(g, labels)};
}

std::vector<Vertex> identity_order(std::size_t n) {
    std::vector<Vertex> out(n);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

TEST(MassStep, CompleteBipartiteUnchanged) {
    auto inst = from(testing::complete_bipartite(3, 5));
    MassStep r = step1_mass(inst.graph, inst.bipartition);
    EXPECT_EQ(r.graph, inst.graph);
    EXPECT_EQ(r.n_max_lower, 5u);
    EXPECT_TRUE(r.events.empty());
}

TEST(MassStep, CycleForcesBothSides) {
    Graph g = testing::cycle(6);
    MassStep r = step1_mass(g, two_coloring(g));
    EXPECT_EQ(r.n_max_lower, 2u);
    EXPECT_EQ(r.graph.num_vertices(), 4u);
    EXPECT_FALSE(r.bipartition.star_set(Side::kFirst).empty());
    EXPECT_FALSE(r.bipartition.star_set(Side::kSecond).empty());
    EXPECT_EQ(r.events.size(), 2u);
}

TEST(MassStep, PathUnchanged) {
    auto [g, bp] = p4();
    MassStep r = step1_mass(g, bp);
    EXPECT_EQ(r.graph, g);
    EXPECT_EQ(r.n_max_lower, 2u);
}

TEST(SeededOrder, IsSeededPermutation) {
    auto o1 = seeded_order(30, 5), o2 = seeded_order(30, 5), o3 = seeded_order(30, 6);
    EXPECT_EQ(o1, o2);
    EXPECT_NE(o1, o3);
    std::sort(o1.begin(), o1.end());
    EXPECT_EQ(o1, identity_order(30));
}

TEST(InitialStep, CompleteBipartiteIsEmpty) {
    auto inst = from(testing::complete_bipartite(4, 4));
    for (std::size_t n : {2u, 3u, 4u}) {
        InitialStep r = step2_initial(inst.graph, inst.bipartition, Side::kFirst, n, 1);
        EXPECT_TRUE(r.a_tilde.empty());
        EXPECT_EQ(r.size_a, 0u);
    }
}

TEST(InitialStep, PathHasSingleCandidate) {
    auto [g, bp] = p4();
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        InitialStep r = step2_initial(g, bp, Side::kFirst, 2, seed);
        EXPECT_EQ(r.a_tilde, set_of(4, {0}));
    }
}

TEST(InitialStep, ResultSatisfiesDisjointCondition) {
    Rng rng(40);
    for (int trial = 0; trial < 300; trial++) {
        auto inst = connected_bipartite(rng, 8, 8);
        MassStep forced = step1_mass(inst.graph, inst.bipartition);
        std::size_t n = 2 + rng.below(3);
        InitialStep r = step2_initial(forced.graph, forced.bipartition, Side::kFirst, n, rng.next());
        EXPECT_TRUE(check_condition_I(r.graph, r.bipartition, r.a_tilde, n).satisfied);
        EXPECT_EQ(r.a_tilde.size(), std::max(r.size_a, r.size_b));
        if (r.used_shared_intersection) {
            EXPECT_GT(r.size_b, r.size_a);
        }
    }
}

TEST(Expansion, PathHasNoCandidates) {
    auto [g, bp] = p4();
    ExpansionState s{g, bp, Side::kFirst, set_of(4, {0}), {}, {}, {}, {}};
    s = expand_a(s, 2);
    EXPECT_TRUE(s.a_bar.empty());
    EXPECT_TRUE(s.map_a.empty());
}

// Re-derives the expansion maps from adjacency alone.
TEST(Expansion, MatchesDefinitions) {
    Rng rng(41);
    for (int trial = 0; trial < 300; trial++) {
        auto inst = connected_bipartite(rng, 8, 8);
        MassStep forced = step1_mass(inst.graph, inst.bipartition);
        std::size_t n = 2 + rng.below(2);
        InitialStep init = step2_initial(forced.graph, forced.bipartition, Side::kFirst, n, rng.next());
        ExpansionState s{init.graph, init.bipartition, Side::kFirst, init.a_tilde, {}, {}, {}, {}};
        s = expand_a(s, n);

        const Graph &g = init.graph;
        std::size_t u = g.universe();
        auto remote = [&](Vertex v) {
            std::vector<bool> r(u, false);
            for (Vertex w = 0; w < u; w++) {
                r[w] = g.has_vertex(w) && init.bipartition.part_of[w] != init.bipartition.part_of[v] &&
                       !g.has_edge(v, w);
            }
            return r;
        };
        auto count = [](const std::vector<bool> &r) { return std::count(r.begin(), r.end(), true); };
        std::vector<Vertex> centers = init.a_tilde.to_vector();
        std::vector<bool> cover(u, false);
        for (Vertex c : centers) {
            auto r = remote(c);
            for (Vertex w = 0; w < u; w++) {
                cover[w] = cover[w] || r[w];
            }
        }
        for (Vertex v = 0; v < u; v++) {
            if (!g.has_vertex(v) || init.bipartition.part_of[v] != 1 || init.a_tilde.contains(v)) {
                continue;
            }
            auto rv = remote(v);
            bool outside = false;
            for (Vertex w = 0; w < u; w++) {
                outside = outside || (rv[w] && !cover[w]);
            }
            bool in_bar = count(rv) + 1 >= static_cast<long>(n) && outside;
            ASSERT_EQ(s.a_bar.contains(v), in_bar) << "vertex " << v;
            if (!in_bar) {
                continue;
            }
            std::vector<Vertex> b2a, dominated, partners;
            bool pairs_ok = true;
            for (Vertex c : centers) {
                auto rc = remote(c);
                long shared = 0, inside = 0;
                for (Vertex w = 0; w < u; w++) {
                    shared += rv[w] && rc[w];
                    inside += rc[w] && !rv[w];
                }
                if (shared == 0) {
                    continue;
                }
                b2a.push_back(c);
                if (inside == 0) {
                    dominated.push_back(c);
                    continue;
                }
                partners.push_back(c);
                pairs_ok = pairs_ok && count(rv) - shared + 1 >= static_cast<long>(n) &&
                           count(rc) - shared + 1 >= static_cast<long>(n);
            }
            EXPECT_EQ(s.map_b2a.at(v).to_vector(), b2a);
            EXPECT_EQ(s.map_abar2a.at(v).to_vector(), dominated);
            bool defined = dominated.size() <= 1 && pairs_ok;
            ASSERT_EQ(s.map_a.count(v) > 0, defined);
            if (defined) {
                EXPECT_EQ(s.map_a.at(v).to_vector(), partners);
            }
        }
    }
}

TEST(Refine, MaximalSetUnchanged) {
    auto [g, bp] = p4();
    RefineResult r = step2_refine(g, bp, Side::kFirst, set_of(4, {0}), 2, identity_order(4));
    EXPECT_EQ(r.a_hat, set_of(4, {0}));
    EXPECT_EQ(r.graph, g);
}

TEST(Refine, SwapThenTrimGrowsCenterSet) {
    auto [g, bp] = swap_instance();
    VertexSet start = set_of(11, {kX, kW});
    ASSERT_TRUE(check_condition_I(g, bp, start, 2).satisfied);
    RefineResult r = step2_refine(g, bp, Side::kFirst, start, 2, identity_order(11));
    EXPECT_EQ(r.a_hat, set_of(11, {kW, kY, kZ}));
    EXPECT_EQ(r.a_hat.size(), start.size() + 1);
    EXPECT_FALSE(r.graph.has_vertex(kX));
    EXPECT_FALSE(r.graph.has_vertex(kP3));
    EXPECT_FALSE(r.graph.has_vertex(kP1));
    ASSERT_GE(r.events.size(), 2u);
    EXPECT_EQ(r.events[0].kind, "trim_replace");
    EXPECT_EQ(r.events[1].kind, "trim_add");
    EXPECT_TRUE(check_condition_I(r.graph, r.bipartition, r.a_hat, 2).satisfied);

    // Exhaustive search over the input: no disjoint set of three exists.
    OracleReport exact = exact_condition_maxima(g, bp, 2);
    EXPECT_EQ(exact.max_a, 2u);
    EXPECT_EQ(exact.max_b, 2u);

    // The deletions plus the final schedule act on the input graph.
    MeasurementPlan plan;
    (g.vertices() - r.graph.vertices()).for_each([&](Vertex v) {
        plan.steps.push_back({v, PauliBasis::kZ, std::nullopt});
    });
    MeasurementPlan tail = build_schedule(r.graph, r.bipartition, r.a_hat);
    plan.steps.insert(plan.steps.end(), tail.steps.begin(), tail.steps.end());
    plan.centers = tail.centers;
    plan.components = tail.components;
    EXPECT_TRUE(verify_schedule(g, plan));
    EXPECT_NO_THROW(apply_schedule(g, plan));
}

TEST(Refine, NeverShrinksOnRandomGraphs) {
    Rng rng(500);
    for (int trial = 0; trial < 500; trial++) {
        auto inst = connected_bipartite(rng, 8, 8);
        MassStep forced = step1_mass(inst.graph, inst.bipartition);
        std::uint64_t seed = rng.next();
        InitialStep init = step2_initial(forced.graph, forced.bipartition, Side::kFirst, 2, seed);
        RefineResult r = step2_refine(init.graph, init.bipartition, Side::kFirst, init.a_tilde, 2,
                                      seeded_order(init.graph.universe(), seed));
        EXPECT_GE(r.a_hat.size(), init.a_tilde.size());
        EXPECT_TRUE(check_condition_I(r.graph, r.bipartition, r.a_hat, 2).satisfied);
    }
}

TEST(Extraction, FivePathYieldsOnePair) {
    Graph g = testing::path(5);
    ExtractionResult r = remote_extraction(g, two_coloring(g), 2, 7);
    EXPECT_EQ(r.volume, 1u);
    ASSERT_EQ(r.locations.size(), 1u);
    EXPECT_EQ(r.locations[0].leaves.size(), 1u);
    EXPECT_TRUE(verify_schedule(g, r.schedule));
}

TEST(Extraction, CompleteBipartiteYieldsNothing) {
    auto inst = from(testing::complete_bipartite(3, 6));
    ExtractionResult r = remote_extraction(inst.graph, inst.bipartition, 2, 1);
    EXPECT_EQ(r.volume, 0u);
    EXPECT_EQ(r.n_max_lower, 6u);
    EXPECT_TRUE(r.locations.empty());
}

TEST(Extraction, InputErrors) {
    auto [g, bp] = p4();
    EXPECT_THROW(remote_extraction(g, bp, 1, 0), ValidationError);
    Bipartition bad = bp;
    bad.part_of = {1, 1, 2, 2};
    EXPECT_THROW(remote_extraction(g, bad, 2, 0), ValidationError);
    ExtractionOptions opt;
    opt.restarts = 0;
    EXPECT_THROW(remote_extraction(g, bp, opt), ValidationError);
}

TEST(Extraction, Deterministic) {
    Rng rng(42);
    for (int trial = 0; trial < 30; trial++) {
        auto inst = connected_bipartite(rng, 10, 12);
        ExtractionOptions opt;
        opt.n = 2 + rng.below(2);
        opt.seed = rng.next();
        opt.both_partitions = trial % 2 == 0;
        opt.restarts = 1 + rng.below(3);
        EXPECT_EQ(remote_extraction(inst.graph, inst.bipartition, opt),
                  remote_extraction(inst.graph, inst.bipartition, opt));
    }
}

TEST(Extraction, SoundOnRandomGraphs) {
    Rng rng(43);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n1 = 3 + rng.below(8), n2 = 3 + rng.below(8);
        auto inst = connected_bipartite(rng, n1, n2);
        std::size_t n = 2 + rng.below(3);
        ExtractionResult r = remote_extraction(inst.graph, inst.bipartition, n, rng.next());
        EXPECT_EQ(r.volume, r.locations.size());
        EXPECT_LE(r.r_tilde, r.volume);
        EXPECT_LE(r.volume, volume_upper_bound(n1 + n2, n));
        VertexSet used(n1 + n2);
        for (const auto &loc : r.locations) {
            EXPECT_GE(loc.leaves.size(), n - 1);
            EXPECT_FALSE(used.contains(loc.center));
            used.insert(loc.center);
            for (Vertex leaf : loc.leaves) {
                EXPECT_FALSE(used.contains(leaf));
                used.insert(leaf);
            }
        }
        if (r.volume > 0) {
            EXPECT_NO_THROW(apply_schedule(inst.graph, r.schedule));
            if (n1 + n2 <= 20) {
                EXPECT_TRUE(verify_schedule(inst.graph, r.schedule)) << "trial " << trial;
            }
        }
    }
}

TEST(Extraction, OptionsOnlyImprove) {
    Rng rng(44);
    for (int trial = 0; trial < 60; trial++) {
        auto inst = connected_bipartite(rng, 9, 9);
        ExtractionOptions base;
        base.seed = rng.next();
        ExtractionResult plain = remote_extraction(inst.graph, inst.bipartition, base);
        ExtractionOptions both = base;
        both.both_partitions = true;
        ExtractionOptions more = base;
        more.restarts = 4;
        EXPECT_GE(remote_extraction(inst.graph, inst.bipartition, both).volume, plain.volume);
        ExtractionResult restarted = remote_extraction(inst.graph, inst.bipartition, more);
        EXPECT_GE(restarted.volume, plain.volume);
        EXPECT_GT(restarted.ops.total(), plain.ops.total());
        EXPECT_GT(plain.ops.total(), 0u);
    }
}

}  // namespace
}  // namespace rvm
