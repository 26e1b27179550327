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

#include "rvm/extraction.h"

#include <algorithm>
#include <numeric>
#include <optional>

#include "rvm/conditions.h"
#include "rvm/rng.h"

namespace rvm {

namespace {

// Charges `count` set operations over a set family of size `width`.
struct Meter {
    std::uint64_t *slot = nullptr;

    void charge(std::size_t width, std::size_t count = 1) const {
        if (slot != nullptr) {
            *slot += static_cast<std::uint64_t>(width) * count;
        }
    }
};

Meter meter(OpCounts *ops, std::uint64_t OpCounts::*field) {
    return Meter{ops == nullptr ? nullptr : &(ops->*field)};
}

bool has_both_stars(const Bipartition &b) {
    return !b.star_set(Side::kFirst).empty() && !b.star_set(Side::kSecond).empty();
}

std::vector<Vertex> members_in_order(const VertexSet &s, const std::vector<Vertex> &order) {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex v : order) {
        if (v < s.universe() && s.contains(v)) {
            out.push_back(v);
        }
    }
    return out;
}

TraceEvent event(std::string kind, std::int64_t value, const VertexSet &s) {
    return TraceEvent{std::move(kind), value, s.to_vector()};
}

TraceEvent event(std::string kind, std::int64_t value, std::vector<Vertex> vs = {}) {
    return TraceEvent{std::move(kind), value, std::move(vs)};
}

// Residuals N(x) \ shared for every x in `group` are each >= n-1 and pairwise
// disjoint.
bool residuals_ok(const std::vector<VertexSet> &remote, const VertexSet &shared, std::size_t n) {
    VertexSet covered(shared.universe());
    for (const VertexSet &r : remote) {
        VertexSet residual = r - shared;
        if (residual.size() + 1 < n || residual.intersects(covered)) {
            return false;
        }
        covered |= residual;
    }
    return true;
}

}  // namespace

std::vector<Vertex> seeded_order(std::size_t universe, std::uint64_t seed) {
    std::vector<Vertex> order(universe);
    std::iota(order.begin(), order.end(), Vertex{0});
    Rng rng(seed);
    rng.shuffle(order);
    return order;
}

MassStep step1_mass(const Graph &g, const Bipartition &b, OpCounts *ops) {
    Meter m = meter(ops, &OpCounts::step1);
    MassStep out{g, b, 0, {}};
    for (Side side : {Side::kFirst, Side::kSecond}) {
        const std::size_t own = out.bipartition.part(side).size();
        const std::size_t opp = out.bipartition.part(other(side)).size();
        // Star detection plus the degree scan of the pick.
        m.charge(opp, 2 * own);
        if (!out.bipartition.star_set(side).empty() || out.bipartition.part(side).empty()) {
            continue;
        }
        StarForcing forced = force_star_vertex(out.graph, out.bipartition, side);
        m.charge(opp, 1);
        out.events.push_back(event("force_star", forced.star, forced.removed));
        out.graph = std::move(forced.graph);
        out.bipartition = std::move(forced.bipartition);
    }
    for (Side side : {Side::kFirst, Side::kSecond}) {
        out.bipartition.star_set(side).for_each(
            [&](Vertex v) { out.n_max_lower = std::max(out.n_max_lower, out.graph.degree(v)); });
    }
    return out;
}

InitialStep step2_initial(const Graph &g, const Bipartition &b, Side side, std::size_t n, std::uint64_t seed,
                          OpCounts *ops) {
    if (n < 2) {
        throw ValidationError("GHZ mass n must be at least 2");
    }
    Meter m = meter(ops, &OpCounts::step2_initial);
    InitialStep out{g, b, g.empty_set(), 0, 0, false, g.empty_set()};
    if (!has_both_stars(b)) {
        return out;
    }
    const std::size_t width = b.part(other(side)).size();
    const std::vector<Vertex> candidates = members_in_order(b.non_star_set(side), seeded_order(g.universe(), seed));
    std::vector<VertexSet> remote;
    remote.reserve(candidates.size());
    for (Vertex v : candidates) {
        remote.push_back(opposite_remote_set(g, b, v));
    }
    m.charge(width, candidates.size());

    VertexSet a_set = g.empty_set();
    VertexSet covered = g.empty_set();
    for (std::size_t i = 0; i < candidates.size(); i++) {
        m.charge(width, 2);
        if (remote[i].size() + 1 >= n && !remote[i].intersects(covered)) {
            a_set.insert(candidates[i]);
            covered |= remote[i];
        }
    }

    // B: the first seed (in order) from which greedy growth reaches two members.
    VertexSet b_set = g.empty_set();
    VertexSet b_shared = g.empty_set();
    for (std::size_t s = 0; s < candidates.size() && b_set.empty(); s++) {
        if (remote[s].empty()) {
            continue;
        }
        std::vector<std::size_t> group{s};
        VertexSet shared = remote[s];
        for (std::size_t w = 0; w < candidates.size(); w++) {
            if (w == s) {
                continue;
            }
            VertexSet trial = shared & remote[w];
            m.charge(width, 1);
            if (trial.empty()) {
                continue;
            }
            std::vector<VertexSet> members;
            for (std::size_t k : group) {
                members.push_back(remote[k]);
            }
            members.push_back(remote[w]);
            m.charge(width, 2 * members.size());
            if (residuals_ok(members, trial, n)) {
                group.push_back(w);
                shared = trial;
            }
        }
        if (group.size() >= 2) {
            for (std::size_t k : group) {
                b_set.insert(candidates[k]);
            }
            b_shared = shared;
        }
    }

    out.size_a = a_set.size();
    out.size_b = b_set.size();
    if (out.size_b > out.size_a) {
        out.used_shared_intersection = true;
        out.removed = b_shared;
        out.graph.remove_vertices_in_place(b_shared);
        out.bipartition = refresh_bipartition(out.graph, b);
        out.a_tilde = b_set;
        m.charge(width, 1);
    } else {
        out.a_tilde = a_set;
    }
    return out;
}

ExpansionState expand_a(ExpansionState state, std::size_t n, OpCounts *ops) {
    Meter m = meter(ops, &OpCounts::expand);
    const Graph &g = state.working_graph;
    const Bipartition &b = state.bipartition;
    const std::size_t width = b.part(other(state.side)).size();
    state.a_bar = g.empty_set();
    state.map_a.clear();
    state.map_b2a.clear();
    state.map_abar2a.clear();

    const std::vector<Vertex> centers = state.a_tilde.to_vector();
    std::vector<VertexSet> center_remote;
    VertexSet cover = g.empty_set();
    for (Vertex c : centers) {
        center_remote.push_back(opposite_remote_set(g, b, c));
        cover |= center_remote.back();
    }
    m.charge(width, 2 * centers.size());

    const VertexSet pool = b.part(state.side) - state.a_tilde;
    pool.for_each([&](Vertex v) {
        VertexSet remote = opposite_remote_set(g, b, v);
        m.charge(width, 2);
        if (remote.size() + 1 < n || remote.is_subset_of(cover)) {
            return;
        }
        state.a_bar.insert(v);
        VertexSet b2a = g.empty_set();
        VertexSet abar2a = g.empty_set();
        bool pairs_ok = true;
        for (std::size_t k = 0; k < centers.size(); k++) {
            m.charge(width, 2);
            if (!remote.intersects(center_remote[k])) {
                continue;
            }
            b2a.insert(centers[k]);
            if (center_remote[k].is_subset_of(remote)) {
                abar2a.insert(centers[k]);
                continue;
            }
            VertexSet shared = remote & center_remote[k];
            m.charge(width, 3);
            if ((remote - shared).size() + 1 < n || (center_remote[k] - shared).size() + 1 < n) {
                pairs_ok = false;
            }
        }
        if (abar2a.size() <= 1 && pairs_ok) {
            state.map_a.emplace(v, b2a - abar2a);
        }
        state.map_b2a.emplace(v, std::move(b2a));
        state.map_abar2a.emplace(v, std::move(abar2a));
    });
    return state;
}

RefineResult step2_refine(const Graph &g, const Bipartition &b, Side side, const VertexSet &a_tilde, std::size_t n,
                          const std::vector<Vertex> &order, OpCounts *ops) {
    Meter m = meter(ops, &OpCounts::refine);
    RefineResult out{g, b, a_tilde, {}};
    if (a_tilde.empty() && !has_both_stars(b)) {
        return out;
    }
    const std::size_t width = b.part(other(side)).size();

    while (true) {
        ExpansionState state{out.graph, out.bipartition, side, out.a_hat, {}, {}, {}, {}};
        state = expand_a(std::move(state), n, ops);
        if (state.map_a.empty()) {
            break;
        }
        std::vector<Vertex> ready;
        for (Vertex v : order) {
            if (state.map_a.count(v) != 0) {
                ready.push_back(v);
            }
        }

        // Candidates whose remote set touches no center are added outright.
        auto pure = std::find_if(ready.begin(), ready.end(), [&](Vertex v) {
            return state.map_a.at(v).empty() && state.map_abar2a.at(v).empty();
        });
        if (pure != ready.end()) {
            out.a_hat.insert(*pure);
            out.events.push_back(event("add", *pure));
            continue;
        }

        // Trim-and-add candidates take precedence over swaps; within a kind
        // the smallest trim wins, ties going to the seeded order.
        struct Move {
            Vertex v;
            VertexSet removed;
        };
        std::optional<Move> move;
        for (int pass = 0; pass < 2 && !move; pass++) {
            for (Vertex v : ready) {
                const VertexSet &partners = state.map_a.at(v);
                const VertexSet &dominated = state.map_abar2a.at(v);
                if (dominated.empty() != (pass == 0)) {
                    continue;
                }
                if (partners.empty()) {
                    // Swapping out a dominated center without trimming
                    // anything only shrinks coverage; it never grows the set.
                    continue;
                }
                const VertexSet remote = opposite_remote_set(out.graph, out.bipartition, v);
                VertexSet overlap = g.empty_set();
                partners.for_each(
                    [&](Vertex p) { overlap |= opposite_remote_set(out.graph, out.bipartition, p); });
                overlap &= remote;
                m.charge(width, partners.size() + 3);
                if ((remote - overlap).size() + 1 < n) {
                    out.events.push_back(event("skip", v, overlap));
                    continue;
                }
                if (!dominated.empty()) {
                    overlap.insert(dominated.first());
                }
                if (!move || overlap.size() < move->removed.size()) {
                    move = Move{v, std::move(overlap)};
                }
            }
        }
        if (!move) {
            break;
        }
        {
            const Vertex v = move->v;
            const VertexSet dominated = state.map_abar2a.at(v);
            if (dominated.empty()) {
                out.events.push_back(event("trim_add", v, move->removed));
            } else {
                out.a_hat.erase(dominated.first());
                out.events.push_back(event("trim_replace", v, move->removed));
            }
            out.a_hat.insert(v);
            out.graph.remove_vertices_in_place(move->removed);
            out.bipartition = refresh_bipartition(out.graph, out.bipartition);
        }

        ConditionReport check = check_condition_I(out.graph, out.bipartition, out.a_hat, n);
        m.charge(width, 2 * out.a_hat.size());
        if (!check.satisfied) {
            throw InvariantBreach("refined center set " + to_string(out.a_hat) +
                                      " violates the disjoint remote-set condition: " + to_string(*check.failed_clause),
                                  out.events);
        }
    }
    return out;
}

namespace {

ExtractionResult extract_once(const Graph &g, const MassStep &mass, Side side, std::size_t n, std::uint64_t seed) {
    ExtractionResult r;
    r.n = n;
    r.seed = seed;
    r.side = side;
    r.n_max_lower = mass.n_max_lower;
    r.trace = mass.events;
    r.trace.push_back(event("side", static_cast<std::int64_t>(index_of(side) + 1)));

    InitialStep init = step2_initial(mass.graph, mass.bipartition, side, n, seed, &r.ops);
    r.r_tilde = init.a_tilde.size();
    r.trace.push_back(event("initial_disjoint", static_cast<std::int64_t>(init.size_a)));
    r.trace.push_back(event("initial_shared", static_cast<std::int64_t>(init.size_b)));
    if (init.used_shared_intersection) {
        r.trace.push_back(event("remove_shared", static_cast<std::int64_t>(init.size_b), init.removed));
    }
    r.trace.push_back(event("initial", static_cast<std::int64_t>(r.r_tilde), init.a_tilde));

    RefineResult refined = step2_refine(init.graph, init.bipartition, side, init.a_tilde, n,
                                        seeded_order(g.universe(), seed), &r.ops);
    r.trace.insert(r.trace.end(), refined.events.begin(), refined.events.end());
    r.volume = refined.a_hat.size();
    r.trace.push_back(event("final", static_cast<std::int64_t>(r.volume), refined.a_hat));

    if (refined.a_hat.empty()) {
        return r;
    }
    MeasurementPlan tail = build_schedule(refined.graph, refined.bipartition, refined.a_hat);
    r.locations = tail.components;
    VertexSet deleted = g.vertices() - refined.graph.vertices();
    deleted.for_each([&](Vertex v) { r.schedule.steps.push_back(MeasurementStep{v, PauliBasis::kZ, std::nullopt}); });
    r.schedule.steps.insert(r.schedule.steps.end(), tail.steps.begin(), tail.steps.end());
    r.schedule.centers = std::move(tail.centers);
    r.schedule.components = std::move(tail.components);
    return r;
}

}  // namespace

ExtractionResult remote_extraction(const Graph &g, const Bipartition &b, const ExtractionOptions &options) {
    if (options.n < 2) {
        throw ValidationError("GHZ mass n must be at least 2");
    }
    if (options.restarts == 0) {
        throw ValidationError("restarts must be at least 1");
    }
    Bipartition labels = refresh_bipartition(g, b);
    OpCounts mass_ops;
    MassStep mass = step1_mass(g, labels, &mass_ops);

    std::optional<ExtractionResult> best;
    std::vector<TraceEvent> restart_log;
    OpCounts spent = mass_ops;
    for (std::size_t r = 0; r < options.restarts; r++) {
        const std::uint64_t seed = r == 0 ? options.seed : split_seed(options.seed, r);
        for (Side side : {Side::kFirst, Side::kSecond}) {
            if (side == Side::kSecond && !options.both_partitions) {
                break;
            }
            ExtractionResult run = extract_once(g, mass, side, options.n, seed);
            spent += run.ops;
            if (options.restarts > 1 || options.both_partitions) {
                restart_log.push_back(event("run", static_cast<std::int64_t>(run.volume),
                                            std::vector<Vertex>{static_cast<Vertex>(r),
                                                                static_cast<Vertex>(index_of(side) + 1)}));
            }
            if (!best || run.volume > best->volume) {
                best = std::move(run);
            }
        }
    }
    ExtractionResult out = std::move(*best);
    out.seed = options.seed;
    out.ops = spent;
    out.trace.insert(out.trace.end(), restart_log.begin(), restart_log.end());
    return out;
}

}  // namespace rvm
