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

#include "rvm/lc_equivalence.h"

#include <array>
#include <bitset>
#include <stdexcept>

namespace rvm {

namespace {

constexpr std::size_t kMaxVertices = 64;
constexpr std::size_t kSearchBudget = 5'000'000;

using Row = std::bitset<4 * kMaxVertices>;

// Unknowns per vertex i: a, b, c, d at 4i..4i+3, with x' = a x + b z and
// z' = c x + d z on qubit i.
std::size_t var(std::size_t i, std::size_t k) {
    return 4 * i + k;
}

struct AffineSpace {
    Row point;
    std::vector<Row> directions;

    bool fix(std::size_t v, bool value) {
        std::size_t hit = directions.size();
        for (std::size_t i = 0; i < directions.size(); i++) {
            if (directions[i][v]) {
                hit = i;
                break;
            }
        }
        if (hit == directions.size()) {
            return point[v] == value;
        }
        const Row e = directions[hit];
        if (point[v] != value) {
            point ^= e;
        }
        directions.erase(directions.begin() + static_cast<std::ptrdiff_t>(hit));
        for (auto &d : directions) {
            if (d[v]) {
                d ^= e;
            }
        }
        return true;
    }
};

AffineSpace null_space(std::vector<Row> rows, std::size_t unknowns) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < rows.size(); col++) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][col]) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i != rank && rows[i][col]) {
                rows[i] ^= rows[rank];
            }
        }
        pivot_col.push_back(col);
        rank++;
    }
    std::vector<bool> is_pivot(unknowns, false);
    for (std::size_t c : pivot_col) {
        is_pivot[c] = true;
    }
    AffineSpace space;
    for (std::size_t f = 0; f < unknowns; f++) {
        if (is_pivot[f]) {
            continue;
        }
        Row dir;
        dir.set(f);
        for (std::size_t r = 0; r < rank; r++) {
            if (rows[r][f]) {
                dir.set(pivot_col[r]);
            }
        }
        space.directions.push_back(dir);
    }
    return space;
}

constexpr std::array<std::array<bool, 4>, 6> kInvertible = {{
    {true, false, false, true},
    {true, true, false, true},
    {true, false, true, true},
    {false, true, true, false},
    {true, true, true, false},
    {false, true, true, true},
}};

bool search(const AffineSpace &space, std::size_t pos, std::size_t count, std::size_t &budget) {
    if (pos == count) {
        return true;
    }
    for (const auto &t : kInvertible) {
        if (budget == 0) {
            throw std::runtime_error("local Clifford search exceeded its budget");
        }
        budget--;
        AffineSpace next = space;
        bool ok = true;
        for (std::size_t k = 0; k < 4 && ok; k++) {
            ok = next.fix(var(pos, k), t[k]);
        }
        if (ok && search(next, pos + 1, count, budget)) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool lc_equivalent(const Graph &a, const Graph &b) {
    if (a.vertices().universe() != b.vertices().universe() || a.vertices() != b.vertices()) {
        return false;
    }
    const std::vector<Vertex> ids = a.vertices().to_vector();
    const std::size_t n = ids.size();
    if (n > kMaxVertices) {
        throw ValidationError("LC-equivalence check supports at most 64 vertices");
    }
    if (a.num_edges() == b.num_edges() && a == b) {
        return true;
    }
    auto adj = [&](const Graph &g, std::size_t i, std::size_t j) { return g.has_edge(ids[i], ids[j]); };

    // Entry (j,k) of  B' A + B' Bd G + C + D G = 0, where G = adjacency of a,
    // B' = adjacency of b and A, Bd, C, D are diagonal.
    std::vector<Row> rows;
    rows.reserve(n * n);
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = 0; k < n; k++) {
            Row r;
            if (adj(b, j, k)) {
                r.flip(var(k, 0));
            }
            for (std::size_t i = 0; i < n; i++) {
                if (adj(b, j, i) && adj(a, i, k)) {
                    r.flip(var(i, 1));
                }
            }
            if (j == k) {
                r.flip(var(j, 2));
            }
            if (adj(a, j, k)) {
                r.flip(var(j, 3));
            }
            if (r.any()) {
                rows.push_back(r);
            }
        }
    }
    AffineSpace space = null_space(std::move(rows), 4 * n);
    std::size_t budget = kSearchBudget;
    return search(space, 0, n, budget);
}

Graph star_graph(std::size_t universe, Vertex center, const std::vector<Vertex> &leaves) {
    Graph g(universe);
    for (Vertex l : leaves) {
        g.add_edge(center, l);
    }
    VertexSet keep(universe, {center});
    for (Vertex l : leaves) {
        keep.insert(l);
    }
    g.remove_vertices_in_place(g.vertices() - keep);
    return g;
}

}  // namespace rvm
