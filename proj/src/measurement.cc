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

#include "rvm/measurement.h"

#include "rvm/conditions.h"

namespace rvm {

char basis_char(PauliBasis b) {
    switch (b) {
        case PauliBasis::kX:
            return 'X';
        case PauliBasis::kY:
            return 'Y';
        case PauliBasis::kZ:
            return 'Z';
    }
    return '?';
}

PauliBasis parse_basis(const std::string &text) {
    if (text == "X" || text == "x") {
        return PauliBasis::kX;
    }
    if (text == "Y" || text == "y") {
        return PauliBasis::kY;
    }
    if (text == "Z" || text == "z") {
        return PauliBasis::kZ;
    }
    throw ValidationError("unknown Pauli basis '" + text + "'");
}

Graph measure_z(const Graph &g, Vertex v) {
    g.require_vertex(v);
    return delete_vertices(g, VertexSet(g.universe(), {v}));
}

Graph measure_y(const Graph &g, Vertex v) {
    g.require_vertex(v);
    Graph out = local_complement(g, v);
    out.remove_vertices_in_place(VertexSet(g.universe(), {v}));
    return out;
}

Graph measure_x(const Graph &g, Vertex v, Vertex k0) {
    g.require_vertex(v);
    g.require_vertex(k0, "special neighbor");
    if (!g.has_edge(v, k0)) {
        throw ValidationError("special neighbor " + std::to_string(k0) + " is not adjacent to measured vertex " +
                              std::to_string(v));
    }
    Graph out = local_complement(g, k0);
    out.local_complement_in_place(v);
    out.remove_vertices_in_place(VertexSet(g.universe(), {v}));
    out.local_complement_in_place(k0);
    return out;
}

Graph apply_step(const Graph &g, const MeasurementStep &step) {
    switch (step.basis) {
        case PauliBasis::kZ:
            return measure_z(g, step.vertex);
        case PauliBasis::kY:
            return measure_y(g, step.vertex);
        case PauliBasis::kX:
            if (!step.special_neighbor) {
                throw ValidationError("X measurement on " + std::to_string(step.vertex) + " lacks a special neighbor");
            }
            return measure_x(g, step.vertex, *step.special_neighbor);
    }
    throw ValidationError("unknown measurement basis");
}

namespace {

/// X on `v` with neighbor k0, degrading to Z when v is isolated by then.
MeasurementStep star_step(const Graph &current, Vertex v, Vertex k0) {
    if (current.degree(v) == 0) {
        return {v, PauliBasis::kZ, std::nullopt};
    }
    if (!current.has_edge(v, k0)) {
        throw ScheduleError("star vertex " + std::to_string(v) + " lost its edge to center " + std::to_string(k0));
    }
    return {v, PauliBasis::kX, k0};
}

}  // namespace

MeasurementPlan build_schedule(const Graph &g, const Bipartition &b, const VertexSet &centers) {
    if (centers.empty()) {
        throw ValidationError("schedule needs at least one center");
    }
    ConditionReport report = check_condition_I(g, b, centers, 2);
    if (!report.satisfied) {
        throw ValidationError("centers " + to_string(centers) + " violate the disjoint remote-set condition: " +
                              to_string(*report.failed_clause));
    }
    Side own = b.side_of(centers.first());
    Side opp = other(own);
    Vertex star_own = b.star_set(own).first();
    Vertex star_opp = b.star_set(opp).first();
    Vertex k0 = centers.first();
    VertexSet covered = remote_set_union(g, b, centers);

    MeasurementPlan plan;
    VertexSet drop_own = b.part(own) - centers;
    drop_own.erase(star_own);
    VertexSet drop_opp = b.part(opp) - covered;
    drop_opp.erase(star_opp);
    (drop_own | drop_opp).for_each([&](Vertex v) { plan.steps.push_back({v, PauliBasis::kZ, std::nullopt}); });

    Graph current = delete_vertices(g, drop_own | drop_opp);
    for (Vertex star : {star_opp, star_own}) {
        MeasurementStep step = star_step(current, star, k0);
        current = apply_step(current, step);
        plan.steps.push_back(step);
    }

    plan.centers = centers.to_vector();
    for (Vertex c : plan.centers) {
        plan.components.push_back({c, opposite_remote_set(g, b, c).to_vector()});
    }
    return plan;
}

Graph apply_schedule(const Graph &g, const MeasurementPlan &plan) {
    Graph current = g;
    for (std::size_t i = 0; i < plan.steps.size(); i++) {
        try {
            current = apply_step(current, plan.steps[i]);
        } catch (const ValidationError &e) {
            throw ScheduleError("step " + std::to_string(i) + " (" + basis_char(plan.steps[i].basis) + " on " +
                                std::to_string(plan.steps[i].vertex) + "): " + e.what());
        }
    }
    if (plan.components.empty()) {
        return current;
    }
    VertexSet expected_alive = current.empty_set();
    std::size_t expected_edges = 0;
    for (const auto &comp : plan.components) {
        if (!current.has_vertex(comp.center)) {
            throw ScheduleError("center " + std::to_string(comp.center) + " did not survive the schedule", comp);
        }
        VertexSet leaves = VertexSet::from_vector(current.universe(), comp.leaves);
        if (current.neighbors(comp.center) != leaves) {
            throw ScheduleError("center " + std::to_string(comp.center) + " has neighbors " +
                                    to_string(current.neighbors(comp.center)) + ", expected " + to_string(leaves),
                                comp);
        }
        for (Vertex leaf : comp.leaves) {
            if (current.neighbors(leaf) != VertexSet(current.universe(), {comp.center})) {
                throw ScheduleError("leaf " + std::to_string(leaf) + " of center " + std::to_string(comp.center) +
                                        " has neighbors " + to_string(current.neighbors(leaf)),
                                    comp);
            }
        }
        expected_alive.insert(comp.center);
        expected_alive |= leaves;
        expected_edges += comp.leaves.size();
    }
    if (current.vertices() != expected_alive || current.num_edges() != expected_edges) {
        throw ScheduleError("surviving vertices " + to_string(current.vertices()) + " differ from the planned " +
                            to_string(expected_alive));
    }
    return current;
}

}  // namespace rvm
