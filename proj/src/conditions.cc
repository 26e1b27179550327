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

#include "rvm/conditions.h"

#include "rvm/independence.h"

namespace rvm {

std::string to_string(FailedClause c) {
    switch (c) {
        case FailedClause::kNoStarVertex:
            return "no_star_vertex";
        case FailedClause::kCardinalityBelowNMinus1:
            return "cardinality_below_n_minus_1";
        case FailedClause::kSetsNotDisjoint:
            return "sets_not_disjoint";
        case FailedClause::kIntersectionNotUnique:
            return "intersection_not_unique";
    }
    return "unknown";
}

namespace {

ConditionReport fail(FailedClause clause, std::optional<std::pair<VertexSet, VertexSet>> witness = std::nullopt) {
    ConditionReport r;
    r.satisfied = false;
    r.failed_clause = clause;
    r.witness = std::move(witness);
    return r;
}

void require_one_partition(const Graph &g, const Bipartition &b, const VertexSet &s) {
    if (s.empty()) {
        return;
    }
    Side side = b.side_of(s.first());
    s.for_each([&](Vertex v) {
        g.require_vertex(v);
        if (b.side_of(v) != side) {
            throw ValidationError("candidate set " + to_string(s) + " straddles both partitions");
        }
    });
}

void require_mass(std::size_t n) {
    if (n < 2) {
        throw ValidationError("GHZ mass n must be at least 2");
    }
}

bool has_stars(const Bipartition &b) {
    return !b.star_set(Side::kFirst).empty() && !b.star_set(Side::kSecond).empty();
}

/// Shared check for sets that must each hold >= n-1 vertices and be pairwise
/// disjoint. `sets` runs parallel to the members of `owners`.
ConditionReport check_disjoint_family(const Graph &g, const VertexSet &owners, const std::vector<VertexSet> &sets,
                                      std::size_t n) {
    auto members = owners.to_vector();
    for (std::size_t i = 0; i < members.size(); i++) {
        if (sets[i].size() + 1 < n) {
            return fail(FailedClause::kCardinalityBelowNMinus1,
                        std::make_pair(VertexSet(g.universe(), {members[i]}), sets[i]));
        }
    }
    VertexSet covered = g.empty_set();
    for (std::size_t i = 0; i < members.size(); i++) {
        if (sets[i].intersects(covered)) {
            for (std::size_t j = 0; j < i; j++) {
                if (sets[i].intersects(sets[j])) {
                    return fail(FailedClause::kSetsNotDisjoint,
                                std::make_pair(VertexSet(g.universe(), {members[j], members[i]}), sets[i] & sets[j]));
                }
            }
        }
        covered |= sets[i];
    }
    ConditionReport ok;
    ok.satisfied = true;
    return ok;
}

}  // namespace

ConditionReport check_condition_I(const Graph &g, const Bipartition &b, const VertexSet &a, std::size_t n) {
    require_mass(n);
    require_one_partition(g, b, a);
    if (!has_stars(b)) {
        return fail(FailedClause::kNoStarVertex);
    }
    std::vector<VertexSet> sets;
    a.for_each([&](Vertex v) { sets.push_back(opposite_remote_set(g, b, v)); });
    return check_disjoint_family(g, a, sets, n);
}

ConditionReport check_condition_II(const Graph &g, const Bipartition &b, const VertexSet &bset, std::size_t n) {
    require_mass(n);
    if (bset.empty()) {
        throw ValidationError("shared-intersection condition needs a nonempty candidate set");
    }
    require_one_partition(g, b, bset);
    if (!has_stars(b)) {
        return fail(FailedClause::kNoStarVertex);
    }
    VertexSet shared = remote_set_intersection(g, b, bset);
    if (shared.empty()) {
        return fail(FailedClause::kIntersectionNotUnique, std::make_pair(bset, shared));
    }
    std::vector<VertexSet> residuals;
    bset.for_each([&](Vertex v) { residuals.push_back(opposite_remote_set(g, b, v) - shared); });
    return check_disjoint_family(g, bset, residuals, n);
}

StarForcing force_star_vertex(const Graph &g, const Bipartition &b, Side side) {
    const VertexSet &part = b.part(side);
    if (part.empty()) {
        throw ValidationError("cannot force a star vertex into an empty partition");
    }
    if (!b.star_set(side).empty()) {
        throw ValidationError("partition P" + std::to_string(index_of(side) + 1) + " already has a star vertex " +
                              std::to_string(b.star_set(side).first()));
    }
    Vertex pick = part.first();
    part.for_each([&](Vertex v) {
        if (g.degree(v) > g.degree(pick)) {
            pick = v;
        }
    });
    StarForcing out;
    out.star = pick;
    out.removed = opposite_remote_set(g, b, pick);
    out.graph = delete_vertices(g, out.removed);
    out.bipartition = refresh_bipartition(out.graph, b);
    return out;
}

std::size_t BoundsReport::volume_upper(std::size_t n) const {
    return volume_upper_bound(num_vertices, n);
}

BoundsReport mass_bounds(const Graph &g) {
    BoundsReport r;
    r.num_vertices = g.num_vertices();
    r.n_max_lower = g.max_degree();
    if (is_bipartite(g)) {
        r.n_max_upper = independence_number_bipartite(g, two_coloring(g));
    } else if (g.num_vertices() <= 40) {
        r.n_max_upper = independence_number_branch_and_bound(g);
    } else {
        r.n_max_upper = independence_number_greedy(g);
        r.upper_exact = false;
    }
    return r;
}

std::size_t volume_upper_bound(std::size_t num_vertices, std::size_t n) {
    if (n < 2) {
        throw ValidationError("GHZ mass n must be at least 2");
    }
    if (n > num_vertices) {
        throw ValidationError("GHZ mass n exceeds the number of vertices");
    }
    return num_vertices / n;
}

}  // namespace rvm
