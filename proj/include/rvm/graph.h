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

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rvm/vertex_set.h"

namespace rvm {

/// Raised for malformed input: unknown vertex ids, bad labelings, out-of-range
/// parameters. The CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph over dense vertex ids 0..universe-1.
///
/// Deleted vertices keep their id slot (so ids stay meaningful against the
/// graph a computation started from) but drop out of vertices() and lose all
/// incident edges.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t universe);

    /// Builds a graph from an edge list. When `require_connected` is set the
    /// result is validated as a graph-state topology (connected).
    static Graph from_edges(std::size_t universe, std::span<const Edge> edges, bool require_connected = false);

    std::size_t universe() const {
        return adjacency_.size();
    }
    std::size_t num_vertices() const {
        return alive_.size();
    }
    std::size_t num_edges() const {
        return edge_count_;
    }
    const VertexSet &vertices() const {
        return alive_;
    }
    bool has_vertex(Vertex v) const {
        return alive_.contains(v);
    }
    const VertexSet &neighbors(Vertex v) const {
        return adjacency_[v];
    }
    std::size_t degree(Vertex v) const {
        return adjacency_[v].size();
    }
    bool has_edge(Vertex u, Vertex v) const {
        return u < universe() && adjacency_[u].contains(v);
    }
    std::size_t max_degree() const;

    /// Sorted (u < v) edge list.
    std::vector<Edge> edges() const;
    bool is_connected() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    // In-place mutators for algorithm drivers. The free functions below are
    // the value-returning equivalents.
    void local_complement_in_place(Vertex v);
    void remove_vertices_in_place(const VertexSet &s);

    VertexSet empty_set() const {
        return VertexSet(universe());
    }
    void require_vertex(Vertex v, const char *what = "vertex") const;

    bool operator==(const Graph &other) const = default;

   private:
    void toggle_edge(Vertex u, Vertex v);

    VertexSet alive_;
    std::vector<VertexSet> adjacency_;
    std::size_t edge_count_ = 0;
};

/// tau_v: complements the edge set inside N(v).
Graph local_complement(const Graph &g, Vertex v);
/// G \ s.
Graph delete_vertices(const Graph &g, const VertexSet &s);
bool is_independent_set(const Graph &g, const VertexSet &s);
/// Connected components of the live vertices, each sorted, ordered by their
/// smallest member.
std::vector<VertexSet> connected_components(const Graph &g);

enum class Side : std::uint8_t { kFirst = 0, kSecond = 1 };

inline Side other(Side s) {
    return s == Side::kFirst ? Side::kSecond : Side::kFirst;
}
inline std::size_t index_of(Side s) {
    return static_cast<std::size_t>(s);
}

/// Two-coloring of a graph's live vertices into P1/P2, with the derived star
/// sets S_i = { v in P_i : N(v) = P_j } and non-star sets V_i = P_i \ S_i.
struct Bipartition {
    /// 1 or 2 for labeled ids, 0 for ids that were never labeled.
    std::vector<std::uint8_t> part_of;
    std::array<VertexSet, 2> parts;
    std::array<VertexSet, 2> stars;
    std::array<VertexSet, 2> non_stars;

    const VertexSet &part(Side s) const {
        return parts[index_of(s)];
    }
    const VertexSet &star_set(Side s) const {
        return stars[index_of(s)];
    }
    const VertexSet &non_star_set(Side s) const {
        return non_stars[index_of(s)];
    }
    /// Side of a labeled live vertex; throws ValidationError otherwise.
    Side side_of(Vertex v) const;

    bool operator==(const Bipartition &other) const = default;
};

/// Recomputes P1, P2, S1, S2, V1, V2 against the current adjacency of `g`.
/// `part_of` must label every live vertex with 1 or 2; an intra-partition edge
/// is rejected with ValidationError.
Bipartition refresh_bipartition(const Graph &g, std::span<const std::uint8_t> part_of);
inline Bipartition refresh_bipartition(const Graph &g, const Bipartition &b) {
    return refresh_bipartition(g, b.part_of);
}
/// BFS two-coloring (smallest id of each component gets label 1). Throws
/// ValidationError if `g` has an odd cycle.
Bipartition two_coloring(const Graph &g);
bool is_bipartite(const Graph &g);

/// N-bar(v): vertices of the opposite partition not adjacent to v.
VertexSet opposite_remote_set(const Graph &g, const Bipartition &b, Vertex v);
/// Union / intersection of opposite remote sets over a nonempty set lying in
/// one partition.
VertexSet remote_set_union(const Graph &g, const Bipartition &b, const VertexSet &s);
VertexSet remote_set_intersection(const Graph &g, const Bipartition &b, const VertexSet &s);

std::string to_string(const VertexSet &s);

}  // namespace rvm
