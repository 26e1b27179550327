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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "rvm/graph.h"

namespace rvm {

enum class FailedClause : std::uint8_t {
    kNoStarVertex,
    kCardinalityBelowNMinus1,
    kSetsNotDisjoint,
    kIntersectionNotUnique,
};

std::string to_string(FailedClause c);

struct ConditionReport {
    bool satisfied = false;
    std::optional<FailedClause> failed_clause;
    /// For a cardinality failure: ({v}, remote set of v). For a disjointness
    /// failure: ({u, v}, the shared vertices).
    std::optional<std::pair<VertexSet, VertexSet>> witness;
};

/// Disjoint remote-set condition: both partitions own a star vertex, every
/// member of `a` has |N-bar(v)| >= n-1, and the members' remote sets are
/// pairwise disjoint. An empty `a` is satisfied whenever stars exist.
ConditionReport check_condition_I(const Graph &g, const Bipartition &b, const VertexSet &a, std::size_t n);

/// Shared-intersection condition: both partitions own a star vertex, the
/// members' common remote set N-bar_cap(bset) is nonempty, and after removing
/// it every member keeps at least n-1 remote vertices, pairwise disjoint.
ConditionReport check_condition_II(const Graph &g, const Bipartition &b, const VertexSet &bset, std::size_t n);

struct StarForcing {
    Graph graph;
    Bipartition bipartition;
    Vertex star = 0;
    /// The removed opposite remote set.
    VertexSet removed;
};

/// Turns the maximum-degree vertex of partition `side` (ties: smallest id) into
/// a star vertex by deleting its opposite remote set. Throws ValidationError if
/// the partition is empty or already has a star vertex.
StarForcing force_star_vertex(const Graph &g, const Bipartition &b, Side side);

struct BoundsReport {
    std::size_t num_vertices = 0;
    /// Delta(G).
    std::size_t n_max_lower = 0;
    /// alpha(G), or a greedy lower estimate when `upper_exact` is false.
    std::size_t n_max_upper = 0;
    bool upper_exact = true;

    std::size_t volume_upper(std::size_t n) const;
};

/// Mass bounds Delta(G) <= n_max <= alpha(G). alpha is exact for bipartite
/// graphs (any size) and general graphs up to 40 vertices.
BoundsReport mass_bounds(const Graph &g);

/// floor(N / n) for 2 <= n <= N.
std::size_t volume_upper_bound(std::size_t num_vertices, std::size_t n);

}  // namespace rvm
