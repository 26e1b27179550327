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

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rvm/graph.h"
#include "rvm/rng.h"

namespace rvm::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
    std::vector<Edge> e(edges);
    return Graph::from_edges(n, e);
}

inline VertexSet set_of(std::size_t universe, std::initializer_list<Vertex> vs) {
    return VertexSet(universe, vs);
}

/// Erdos-Renyi graph, independent of the library generators.
inline Graph random_graph(Rng &rng, std::size_t n, double p) {
    Graph g(n);
    for (Vertex u = 0; u < n; u++) {
        for (Vertex v = u + 1; v < n; v++) {
            if (rng.bernoulli(p)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

struct Bip {
    Graph graph;
    std::vector<std::uint8_t> labels;
};

/// Random bipartite graph with ids [0, n1) on side 1 and each cross pair
/// present with probability p. Not necessarily connected.
inline Bip random_bipartite(Rng &rng, std::size_t n1, std::size_t n2, double p) {
    Bip b{Graph(n1 + n2), std::vector<std::uint8_t>(n1 + n2, 2)};
    for (Vertex u = 0; u < n1; u++) {
        b.labels[u] = 1;
        for (Vertex v = static_cast<Vertex>(n1); v < n1 + n2; v++) {
            if (rng.bernoulli(p)) {
                b.graph.add_edge(u, v);
            }
        }
    }
    return b;
}

/// Cycle 0-1-...-(n-1)-0.
inline Graph cycle(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v < n; v++) {
        g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    }
    return g;
}

inline Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; v++) {
        g.add_edge(v, v + 1);
    }
    return g;
}

/// K_{a,b} with ids [0, a) on side 1.
inline Bip complete_bipartite(std::size_t a, std::size_t b) {
    Bip out{Graph(a + b), std::vector<std::uint8_t>(a + b, 2)};
    for (Vertex u = 0; u < a; u++) {
        out.labels[u] = 1;
        for (Vertex v = static_cast<Vertex>(a); v < a + b; v++) {
            out.graph.add_edge(u, v);
        }
    }
    return out;
}

}  // namespace rvm::testing
