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

#include "rvm/graph.h"

#include <algorithm>
#include <deque>
#include <sstream>

namespace rvm {

Graph::Graph(std::size_t universe)
    : alive_(VertexSet::full(universe)), adjacency_(universe, VertexSet(universe)) {
}

Graph Graph::from_edges(std::size_t universe, std::span<const Edge> edges, bool require_connected) {
    Graph g(universe);
    for (const auto &[u, v] : edges) {
        if (u >= universe || v >= universe) {
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " +
                                  std::to_string(universe) + " vertices");
        }
        if (u == v) {
            throw ValidationError("self-loop on vertex " + std::to_string(u));
        }
        if (g.has_edge(u, v)) {
            throw ValidationError("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        g.add_edge(u, v);
    }
    if (require_connected && !g.is_connected()) {
        throw ValidationError("graph-state topology must be connected");
    }
    return g;
}

void Graph::require_vertex(Vertex v, const char *what) const {
    if (!has_vertex(v)) {
        throw ValidationError(std::string("unknown ") + what + " " + std::to_string(v));
    }
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    alive_.for_each([&](Vertex v) { best = std::max(best, degree(v)); });
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    alive_.for_each([&](Vertex u) {
        adjacency_[u].for_each([&](Vertex v) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        });
    });
    return out;
}

bool Graph::is_connected() const {
    if (alive_.empty()) {
        return true;
    }
    return connected_components(*this).size() == 1;
}

void Graph::add_edge(Vertex u, Vertex v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) {
        throw ValidationError("self-loop on vertex " + std::to_string(u));
    }
    if (!adjacency_[u].contains(v)) {
        toggle_edge(u, v);
    }
}

void Graph::remove_edge(Vertex u, Vertex v) {
    require_vertex(u);
    require_vertex(v);
    if (adjacency_[u].contains(v)) {
        toggle_edge(u, v);
    }
}

void Graph::toggle_edge(Vertex u, Vertex v) {
    bool had = adjacency_[u].contains(v);
    adjacency_[u].flip(v);
    adjacency_[v].flip(u);
    if (had) {
        edge_count_--;
    } else {
        edge_count_++;
    }
}

void Graph::local_complement_in_place(Vertex v) {
    require_vertex(v);
    auto nbrs = adjacency_[v].to_vector();
    for (std::size_t i = 0; i < nbrs.size(); i++) {
        for (std::size_t j = i + 1; j < nbrs.size(); j++) {
            toggle_edge(nbrs[i], nbrs[j]);
        }
    }
}

void Graph::remove_vertices_in_place(const VertexSet &s) {
    s.for_each([&](Vertex v) { require_vertex(v); });
    s.for_each([&](Vertex v) {
        adjacency_[v].clear();
        alive_.erase(v);
    });
    std::size_t degree_sum = 0;
    alive_.for_each([&](Vertex u) {
        adjacency_[u] -= s;
        degree_sum += adjacency_[u].size();
    });
    edge_count_ = degree_sum / 2;
}

Graph local_complement(const Graph &g, Vertex v) {
    Graph out = g;
    out.local_complement_in_place(v);
    return out;
}

Graph delete_vertices(const Graph &g, const VertexSet &s) {
    Graph out = g;
    out.remove_vertices_in_place(s);
    return out;
}

bool is_independent_set(const Graph &g, const VertexSet &s) {
    bool independent = true;
    s.for_each([&](Vertex v) {
        if (independent && g.neighbors(v).intersects(s)) {
            independent = false;
        }
    });
    return independent;
}

std::vector<VertexSet> connected_components(const Graph &g) {
    std::vector<VertexSet> out;
    VertexSet seen = g.empty_set();
    g.vertices().for_each([&](Vertex root) {
        if (seen.contains(root)) {
            return;
        }
        VertexSet comp = g.empty_set();
        std::deque<Vertex> queue{root};
        seen.insert(root);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            comp.insert(u);
            (g.neighbors(u) - seen).for_each([&](Vertex w) {
                seen.insert(w);
                queue.push_back(w);
            });
        }
        out.push_back(std::move(comp));
    });
    return out;
}

Side Bipartition::side_of(Vertex v) const {
    if (v >= part_of.size() || part_of[v] == 0 || !(parts[0].contains(v) || parts[1].contains(v))) {
        throw ValidationError("vertex " + std::to_string(v) + " is not labeled in the bipartition");
    }
    return part_of[v] == 1 ? Side::kFirst : Side::kSecond;
}

Bipartition refresh_bipartition(const Graph &g, std::span<const std::uint8_t> part_of) {
    if (part_of.size() < g.universe()) {
        throw ValidationError("partition labels cover " + std::to_string(part_of.size()) + " of " +
                              std::to_string(g.universe()) + " vertex ids");
    }
    Bipartition b;
    b.part_of.assign(part_of.begin(), part_of.begin() + static_cast<std::ptrdiff_t>(g.universe()));
    for (auto &p : b.parts) {
        p = g.empty_set();
    }
    g.vertices().for_each([&](Vertex v) {
        std::uint8_t label = b.part_of[v];
        if (label != 1 && label != 2) {
            throw ValidationError("vertex " + std::to_string(v) + " has no partition label");
        }
        b.parts[label - 1].insert(v);
    });
    for (std::size_t i = 0; i < 2; i++) {
        const VertexSet &own = b.parts[i];
        const VertexSet &opposite = b.parts[1 - i];
        b.stars[i] = g.empty_set();
        own.for_each([&](Vertex v) {
            if (g.neighbors(v).intersects(own)) {
                throw ValidationError("edge inside partition P" + std::to_string(i + 1) + " at vertex " +
                                      std::to_string(v) + ": labeling is not bipartite");
            }
            if (g.neighbors(v) == opposite) {
                b.stars[i].insert(v);
            }
        });
        b.non_stars[i] = own - b.stars[i];
    }
    return b;
}

Bipartition two_coloring(const Graph &g) {
    std::vector<std::uint8_t> label(g.universe(), 0);
    g.vertices().for_each([&](Vertex root) {
        if (label[root] != 0) {
            return;
        }
        label[root] = 1;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            g.neighbors(u).for_each([&](Vertex w) {
                if (label[w] == 0) {
                    label[w] = static_cast<std::uint8_t>(3 - label[u]);
                    queue.push_back(w);
                } else if (label[w] == label[u]) {
                    throw ValidationError("graph has an odd cycle through edge (" + std::to_string(u) + "," +
                                          std::to_string(w) + ")");
                }
            });
        }
    });
    return refresh_bipartition(g, label);
}

bool is_bipartite(const Graph &g) {
    try {
        two_coloring(g);
        return true;
    } catch (const ValidationError &) {
        return false;
    }
}

VertexSet opposite_remote_set(const Graph &g, const Bipartition &b, Vertex v) {
    g.require_vertex(v);
    Side s = b.side_of(v);
    return b.part(other(s)) - g.neighbors(v);
}

namespace {

Side common_side(const Graph &g, const Bipartition &b, const VertexSet &s) {
    if (s.empty()) {
        throw ValidationError("remote-set fold over an empty vertex set");
    }
    Side side = b.side_of(s.first());
    s.for_each([&](Vertex v) {
        g.require_vertex(v);
        if (b.side_of(v) != side) {
            throw ValidationError("vertex set straddles both partitions");
        }
    });
    return side;
}

}  // namespace

VertexSet remote_set_union(const Graph &g, const Bipartition &b, const VertexSet &s) {
    common_side(g, b, s);
    VertexSet out = g.empty_set();
    s.for_each([&](Vertex v) { out |= opposite_remote_set(g, b, v); });
    return out;
}

VertexSet remote_set_intersection(const Graph &g, const Bipartition &b, const VertexSet &s) {
    Side side = common_side(g, b, s);
    VertexSet out = b.part(other(side));
    s.for_each([&](Vertex v) { out &= opposite_remote_set(g, b, v); });
    return out;
}

std::string to_string(const VertexSet &s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    s.for_each([&](Vertex v) {
        out << (first ? "" : ",") << v;
        first = false;
    });
    out << '}';
    return out.str();
}

}  // namespace rvm
