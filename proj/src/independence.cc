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

#include "rvm/independence.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace rvm {

namespace {

bool augment(const Graph &g, Vertex u, std::vector<Vertex> &match_of, std::vector<char> &visited,
             Vertex unmatched) {
    bool found = false;
    g.neighbors(u).for_each([&](Vertex w) {
        if (found || visited[w]) {
            return;
        }
        visited[w] = 1;
        if (match_of[w] == unmatched || augment(g, match_of[w], match_of, visited, unmatched)) {
            match_of[w] = u;
            found = true;
        }
    });
    return found;
}

}  // namespace

std::size_t maximum_matching_size(const Graph &g, const Bipartition &b) {
    const Vertex unmatched = static_cast<Vertex>(g.universe());
    std::vector<Vertex> match_of(g.universe(), unmatched);
    std::vector<char> visited(g.universe(), 0);
    std::size_t size = 0;
    b.part(Side::kFirst).for_each([&](Vertex u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(g, u, match_of, visited, unmatched)) {
            size++;
        }
    });
    return size;
}

std::size_t independence_number_bipartite(const Graph &g, const Bipartition &b) {
    return g.num_vertices() - maximum_matching_size(g, b);
}

namespace {

struct MaskGraph {
    std::vector<std::uint64_t> adj;
};

int mis_recurse(const MaskGraph &mg, std::uint64_t cand, int current, int best) {
    if (cand == 0) {
        return std::max(current, best);
    }
    if (current + std::popcount(cand) <= best) {
        return best;
    }
    // Vertices of degree <= 1 inside cand can always be taken.
    std::uint64_t scan = cand;
    int pick = -1;
    int pick_deg = -1;
    while (scan != 0) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        int d = std::popcount(mg.adj[static_cast<std::size_t>(v)] & cand);
        if (d <= 1) {
            return mis_recurse(mg, cand & ~(mg.adj[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v)), current + 1,
                               best);
        }
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    std::uint64_t bit = std::uint64_t{1} << pick;
    best = mis_recurse(mg, cand & ~(mg.adj[static_cast<std::size_t>(pick)] | bit), current + 1, best);
    best = mis_recurse(mg, cand & ~bit, current, best);
    return best;
}

}  // namespace

std::size_t independence_number_branch_and_bound(const Graph &g) {
    auto ids = g.vertices().to_vector();
    if (ids.size() > 64) {
        throw ValidationError("branch-and-bound independence number supports at most 64 vertices");
    }
    std::vector<std::size_t> index(g.universe(), 0);
    for (std::size_t i = 0; i < ids.size(); i++) {
        index[ids[i]] = i;
    }
    MaskGraph mg;
    mg.adj.assign(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); i++) {
        g.neighbors(ids[i]).for_each([&](Vertex w) { mg.adj[i] |= std::uint64_t{1} << index[w]; });
    }
    std::uint64_t all = ids.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ids.size()) - 1;
    return static_cast<std::size_t>(mis_recurse(mg, all, 0, 0));
}

std::size_t independence_number_greedy(const Graph &g) {
    VertexSet remaining = g.vertices();
    std::size_t count = 0;
    while (!remaining.empty()) {
        Vertex pick = remaining.first();
        std::size_t pick_deg = g.universe() + 1;
        remaining.for_each([&](Vertex v) {
            std::size_t d = (g.neighbors(v) & remaining).size();
            if (d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });
        remaining -= g.neighbors(pick);
        remaining.erase(pick);
        count++;
    }
    return count;
}

}  // namespace rvm
