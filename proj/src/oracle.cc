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

#include "rvm/oracle.h"

#include <bit>

#include "rvm/conditions.h"
#include "rvm/extraction.h"
#include "rvm/independence.h"
#include "rvm/lc_equivalence.h"
#include "rvm/tableau.h"

namespace rvm {

namespace {

constexpr std::size_t kEnumerationGuard = 18;
constexpr std::size_t kAlphaGuard = 40;

struct Candidates {
    std::vector<Vertex> ids;
    std::vector<VertexSet> remote;
};

// Largest family of pairwise-disjoint remote sets, by branching on the lowest
// open candidate. `conflict[i]` has bit j when the sets of i and j meet.
void best_disjoint(const std::vector<std::uint32_t> &conflict, std::uint32_t open, std::uint32_t chosen,
                   std::uint32_t &best, std::uint64_t &enumerated) {
    enumerated++;
    if (open == 0) {
        if (std::popcount(chosen) > std::popcount(best)) {
            best = chosen;
        }
        return;
    }
    if (std::popcount(chosen) + std::popcount(open) <= std::popcount(best)) {
        return;
    }
    const int i = std::countr_zero(open);
    const std::uint32_t rest = open & ~(std::uint32_t{1} << i);
    best_disjoint(conflict, rest & ~conflict[i], chosen | (std::uint32_t{1} << i), best, enumerated);
    best_disjoint(conflict, rest, chosen, best, enumerated);
}

struct SharedSearch {
    const Candidates &c;
    std::size_t n;
    std::uint32_t best = 0;
    std::uint64_t enumerated = 0;

    bool valid(std::uint32_t members, const VertexSet &shared) const {
        VertexSet covered(shared.universe());
        for (std::uint32_t m = members; m != 0; m &= m - 1) {
            VertexSet residual = c.remote[static_cast<std::size_t>(std::countr_zero(m))] - shared;
            if (residual.size() + 1 < n || residual.intersects(covered)) {
                return false;
            }
            covered |= residual;
        }
        return true;
    }

    // Subsets grow in index order; an empty common set can never recover.
    void run(std::size_t next, std::uint32_t members, const VertexSet &shared) {
        enumerated++;
        if (std::popcount(members) > std::popcount(best) && valid(members, shared)) {
            best = members;
        }
        for (std::size_t i = next; i < c.ids.size(); i++) {
            VertexSet narrowed = members == 0 ? c.remote[i] : shared & c.remote[i];
            if (narrowed.empty()) {
                continue;
            }
            run(i + 1, members | (std::uint32_t{1} << i), narrowed);
        }
    }
};

VertexSet to_set(std::size_t universe, const Candidates &c, std::uint32_t members) {
    VertexSet s(universe);
    for (std::uint32_t m = members; m != 0; m &= m - 1) {
        s.insert(c.ids[static_cast<std::size_t>(std::countr_zero(m))]);
    }
    return s;
}

}  // namespace

OracleReport exact_condition_maxima(const Graph &g, const Bipartition &b, std::size_t n, Side side) {
    if (n < 2) {
        throw ValidationError("GHZ mass n must be at least 2");
    }
    MassStep mass = step1_mass(g, refresh_bipartition(g, b));
    const Graph &h = mass.graph;
    const Bipartition &hb = mass.bipartition;
    Candidates c;
    c.ids = hb.non_star_set(side).to_vector();
    if (c.ids.size() > kEnumerationGuard) {
        throw ValidationError("exact enumeration is limited to " + std::to_string(kEnumerationGuard) +
                              " candidate vertices, got " + std::to_string(c.ids.size()) +
                              "; subsample the graph first");
    }
    for (Vertex v : c.ids) {
        c.remote.push_back(opposite_remote_set(h, hb, v));
    }

    OracleReport r;
    const std::size_t k = c.ids.size();
    std::uint32_t eligible = 0;
    std::vector<std::uint32_t> conflict(k, 0);
    for (std::size_t i = 0; i < k; i++) {
        if (c.remote[i].size() + 1 >= n) {
            eligible |= std::uint32_t{1} << i;
        }
        for (std::size_t j = 0; j < k; j++) {
            if (i != j && c.remote[i].intersects(c.remote[j])) {
                conflict[i] |= std::uint32_t{1} << j;
            }
        }
    }
    std::uint32_t best_a = 0;
    best_disjoint(conflict, eligible, 0, best_a, r.enumerated);

    SharedSearch shared{c, n};
    shared.run(0, 0, h.empty_set());
    r.enumerated += shared.enumerated;

    r.max_a = static_cast<std::size_t>(std::popcount(best_a));
    r.max_b = static_cast<std::size_t>(std::popcount(shared.best));
    r.theoretical_lower = std::max(r.max_a, r.max_b);
    r.witness_sets = {to_set(g.universe(), c, best_a), to_set(g.universe(), c, shared.best)};
    return r;
}

std::size_t exact_alpha(const Graph &g) {
    if (is_bipartite(g)) {
        return independence_number_bipartite(g, two_coloring(g));
    }
    if (g.num_vertices() > kAlphaGuard) {
        throw ValidationError("exact independence number of a non-bipartite graph is limited to " +
                              std::to_string(kAlphaGuard) + " vertices");
    }
    return independence_number_branch_and_bound(g);
}

VerifyReport verify_schedule_report(const Graph &g, const MeasurementPlan &plan) {
    Tableau state = tableau_from_graph(g);
    Graph shadow = g;
    VertexSet measured = g.empty_set();
    for (const MeasurementStep &step : plan.steps) {
        try {
            shadow = apply_step(shadow, step);
        } catch (const ValidationError &e) {
            return {false, std::string("plan is not executable: ") + e.what()};
        }
        state = tableau_measure(state, step.vertex, step.basis);
        measured.insert(step.vertex);
    }

    VertexSet expected = g.empty_set();
    for (const StarComponent &comp : plan.components) {
        VertexSet part(g.universe(), {comp.center});
        for (Vertex l : comp.leaves) {
            part.insert(l);
        }
        if (part.intersects(expected)) {
            return {false, "components overlap at " + to_string(part & expected)};
        }
        expected |= part;
    }
    const VertexSet survivors = g.vertices() - measured;
    if (survivors != expected) {
        return {false, "unmeasured qubits " + to_string(survivors) + " differ from the claimed components " +
                           to_string(expected)};
    }
    for (const StarComponent &comp : plan.components) {
        Graph target = star_graph(g.universe(), comp.center, comp.leaves);
        auto local = restrict_to(state, target.vertices());
        if (!local) {
            return {false, "component centered at " + std::to_string(comp.center) +
                               " is entangled with the rest of the register"};
        }
        Graph actual = graph_form(*local, target.vertices());
        if (!lc_equivalent(actual, target)) {
            return {false, "component centered at " + std::to_string(comp.center) + " is not a GHZ state"};
        }
    }
    return {true, ""};
}

}  // namespace rvm
