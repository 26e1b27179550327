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

#include "rvm/topology.h"

#include <algorithm>
#include <numeric>

#include "rvm/rng.h"

namespace rvm {

std::string to_string(Family f) {
    switch (f) {
        case Family::kRandomBipartite:
            return "random_bipartite";
        case Family::kBarabasiAlbert:
            return "barabasi_albert";
        case Family::kAsLike:
            return "as_like";
        case Family::kPpiLike:
            return "ppi_like";
        case Family::kBipartiteNet:
            return "bipartite_net";
    }
    return "unknown";
}

Family parse_family(const std::string &text) {
    if (text == "random_bipartite" || text == "bipartite") {
        return Family::kRandomBipartite;
    }
    if (text == "barabasi_albert" || text == "ba") {
        return Family::kBarabasiAlbert;
    }
    if (text == "as_like" || text == "as") {
        return Family::kAsLike;
    }
    if (text == "ppi_like" || text == "ppi") {
        return Family::kPpiLike;
    }
    if (text == "bipartite_net") {
        return Family::kBipartiteNet;
    }
    throw ValidationError("unknown topology family '" + text + "'");
}

std::pair<std::size_t, std::size_t> bipartite_edge_range(std::size_t n1, std::size_t n2) {
    return {n1 + n2 - 1, n1 * n2};
}

BipartiteInstance gen_random_bipartite(std::size_t n1, std::size_t n2, std::size_t m, std::uint64_t seed) {
    if (n1 == 0 || n2 == 0) {
        throw ValidationError("both partitions need at least one vertex");
    }
    auto [lo, hi] = bipartite_edge_range(n1, n2);
    if (m < lo || m > hi) {
        throw ValidationError("edge count " + std::to_string(m) + " outside [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "] for partitions " + std::to_string(n1) + "x" +
                              std::to_string(n2));
    }
    Rng rng(seed);
    const std::size_t total = n1 + n2;
    Graph g(total);

    std::vector<Vertex> first(n1);
    std::vector<Vertex> second(n2);
    std::iota(first.begin(), first.end(), Vertex{0});
    std::iota(second.begin(), second.end(), static_cast<Vertex>(n1));
    rng.shuffle(first);
    rng.shuffle(second);

    // Spanning tree: seed with one cross edge, then attach the rest in a
    // shuffled interleaving to a random tree vertex of the other side.
    std::vector<Vertex> in_first{first[0]};
    std::vector<Vertex> in_second{second[0]};
    g.add_edge(first[0], second[0]);
    std::vector<Vertex> pending(first.begin() + 1, first.end());
    pending.insert(pending.end(), second.begin() + 1, second.end());
    rng.shuffle(pending);
    for (Vertex v : pending) {
        const bool is_first = v < n1;
        std::vector<Vertex> &opposite = is_first ? in_second : in_first;
        g.add_edge(v, opposite[rng.below(opposite.size())]);
        (is_first ? in_first : in_second).push_back(v);
    }

    std::vector<Edge> open;
    for (Vertex u = 0; u < n1; u++) {
        for (Vertex v = static_cast<Vertex>(n1); v < total; v++) {
            if (!g.has_edge(u, v)) {
                open.emplace_back(u, v);
            }
        }
    }
    const std::size_t extra = m - lo;
    for (std::size_t i = 0; i < extra; i++) {
        std::size_t j = i + rng.below(open.size() - i);
        std::swap(open[i], open[j]);
        g.add_edge(open[i].first, open[i].second);
    }

    std::vector<std::uint8_t> labels(total, 2);
    std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n1), 1);
    BipartiteInstance out{std::move(g), {}};
    out.bipartition = refresh_bipartition(out.graph, labels);
    return out;
}

namespace {

// k distinct targets among [0, limit), drawn with probability proportional
// to weight(v).
template <typename Weight>
std::vector<Vertex> weighted_targets(Rng &rng, std::size_t limit, std::size_t k, Weight weight) {
    std::vector<Vertex> picked;
    std::vector<double> w(limit);
    for (std::size_t v = 0; v < limit; v++) {
        w[v] = weight(static_cast<Vertex>(v));
    }
    while (picked.size() < k) {
        double total = std::accumulate(w.begin(), w.end(), 0.0);
        std::size_t chosen = 0;
        if (total <= 0.0) {
            std::vector<Vertex> free;
            for (std::size_t v = 0; v < limit; v++) {
                if (std::find(picked.begin(), picked.end(), v) == picked.end()) {
                    free.push_back(static_cast<Vertex>(v));
                }
            }
            chosen = free[rng.below(free.size())];
        } else {
            double r = rng.uniform() * total;
            chosen = limit - 1;
            for (std::size_t v = 0; v < limit; v++) {
                if (w[v] <= 0.0) {
                    continue;
                }
                if (r < w[v]) {
                    chosen = v;
                    break;
                }
                r -= w[v];
            }
            while (w[chosen] <= 0.0) {
                chosen--;
            }
        }
        picked.push_back(static_cast<Vertex>(chosen));
        w[chosen] = 0.0;
    }
    return picked;
}

Graph barabasi_albert(std::size_t n, std::size_t k, Rng &rng) {
    if (k < 1 || k >= n) {
        throw ValidationError("attachment count must lie in [1, n-1]");
    }
    Graph g(n);
    std::vector<Vertex> ends;
    for (Vertex u = 0; u < k; u++) {
        for (Vertex v = u + 1; v < k; v++) {
            g.add_edge(u, v);
            ends.push_back(u);
            ends.push_back(v);
        }
    }
    for (Vertex t = static_cast<Vertex>(k); t < n; t++) {
        std::vector<Vertex> targets;
        while (targets.size() < k) {
            Vertex c = ends.empty() ? static_cast<Vertex>(rng.below(t)) : ends[rng.below(ends.size())];
            if (std::find(targets.begin(), targets.end(), c) == targets.end()) {
                targets.push_back(c);
            }
        }
        for (Vertex c : targets) {
            g.add_edge(t, c);
            ends.push_back(t);
            ends.push_back(c);
        }
    }
    return g;
}

void require_target(std::size_t n, std::size_t m) {
    if (m < n - 1 || m > n * (n - 1) / 2) {
        throw ValidationError("target edge count " + std::to_string(m) + " outside [" + std::to_string(n - 1) + ", " +
                              std::to_string(n * (n - 1) / 2) + "]");
    }
}

Graph as_like(std::size_t n, std::size_t m, double offset, Rng &rng) {
    require_target(n, m);
    if (offset <= 0.0) {
        throw ValidationError("attachment offset must be positive");
    }
    // Quotas for nodes 2..n-1: one edge each for connectivity, then the
    // surplus dealt round-robin from the last node back (node t holds <= t).
    std::vector<std::size_t> quota(n, 1);
    std::size_t surplus = m - (n - 1);
    while (surplus > 0) {
        for (std::size_t t = n - 1; t >= 2 && surplus > 0; t--) {
            if (quota[t] < t) {
                quota[t]++;
                surplus--;
            }
        }
    }
    Graph g(n);
    g.add_edge(0, 1);
    for (Vertex t = 2; t < n; t++) {
        auto targets = weighted_targets(rng, t, quota[t], [&](Vertex v) { return g.degree(v) + offset; });
        for (Vertex c : targets) {
            g.add_edge(t, c);
        }
    }
    return g;
}

Graph ppi_like(std::size_t n, std::size_t m, double retain, Rng &rng) {
    require_target(n, m);
    if (retain < 0.0 || retain > 1.0) {
        throw ValidationError("retention probability must lie in [0, 1]");
    }
    Graph g(n);
    g.add_edge(0, 1);
    for (Vertex t = 2; t < n; t++) {
        Vertex anchor = static_cast<Vertex>(rng.below(t));
        bool linked = false;
        for (Vertex u : g.neighbors(anchor).to_vector()) {
            if (rng.bernoulli(retain)) {
                g.add_edge(t, u);
                linked = true;
            }
        }
        if (!linked) {
            g.add_edge(t, anchor);
        }
    }
    if (g.num_edges() < m) {
        std::vector<Edge> open;
        for (Vertex u = 0; u < n; u++) {
            for (Vertex v = u + 1; v < n; v++) {
                if (!g.has_edge(u, v)) {
                    open.emplace_back(u, v);
                }
            }
        }
        rng.shuffle(open);
        for (std::size_t i = 0; g.num_edges() < m; i++) {
            g.add_edge(open[i].first, open[i].second);
        }
    } else if (g.num_edges() > m) {
        std::vector<Edge> present = g.edges();
        rng.shuffle(present);
        for (const Edge &e : present) {
            if (g.num_edges() == m) {
                break;
            }
            g.remove_edge(e.first, e.second);
            if (!g.is_connected()) {
                g.add_edge(e.first, e.second);
            }
        }
        if (g.num_edges() != m) {
            throw std::logic_error("could not trim to the target edge count while staying connected");
        }
    }
    return g;
}

}  // namespace

Graph gen_internet_like(const InternetParams &p, std::uint64_t seed) {
    if (p.n < 3) {
        throw ValidationError("Internet-like topologies need at least 3 nodes");
    }
    Rng rng(seed);
    switch (p.family) {
        case Family::kBarabasiAlbert:
            return barabasi_albert(p.n, p.density, rng);
        case Family::kAsLike:
            return as_like(p.n, p.density, p.offset, rng);
        case Family::kPpiLike:
            return ppi_like(p.n, p.density, p.retain, rng);
        case Family::kBipartiteNet: {
            const std::size_t n1 = p.n / 2;
            const std::size_t n2 = p.n - n1;
            auto [lo, hi] = bipartite_edge_range(n1, n2);
            return gen_random_bipartite(n1, n2, std::clamp(p.density, lo, hi), rng.next()).graph;
        }
        case Family::kRandomBipartite:
            break;
    }
    throw ValidationError("use gen_random_bipartite for the random_bipartite family");
}

SubgraphExtraction extract_bipartite_subgraph(const Graph &g, std::size_t k, std::uint64_t seed,
                                              std::size_t max_restarts) {
    if (k == 0 || k > g.num_vertices()) {
        throw ValidationError("subgraph size " + std::to_string(k) + " must lie in [1, " +
                              std::to_string(g.num_vertices()) + "]");
    }
    const std::vector<Vertex> live = g.vertices().to_vector();
    std::size_t best_size = 0;
    for (std::size_t attempt = 0; attempt < max_restarts; attempt++) {
        Rng rng(split_seed(seed, attempt));
        std::vector<std::uint8_t> color(g.universe(), 0);
        VertexSet chosen = g.empty_set();
        VertexSet blocked = g.empty_set();
        const Vertex root = live[rng.below(live.size())];
        chosen.insert(root);
        color[root] = 1;
        while (chosen.size() < k) {
            VertexSet frontier = g.empty_set();
            chosen.for_each([&](Vertex v) { frontier |= g.neighbors(v); });
            frontier -= chosen;
            frontier -= blocked;
            if (frontier.empty()) {
                break;
            }
            std::vector<Vertex> options = frontier.to_vector();
            const Vertex w = options[rng.below(options.size())];
            std::uint8_t seen = 0;
            bool clash = false;
            (g.neighbors(w) & chosen).for_each([&](Vertex u) {
                if (seen != 0 && color[u] != seen) {
                    clash = true;
                }
                seen = color[u];
            });
            if (clash) {
                blocked.insert(w);
                continue;
            }
            color[w] = static_cast<std::uint8_t>(3 - seen);
            chosen.insert(w);
        }
        best_size = std::max(best_size, chosen.size());
        if (chosen.size() < k) {
            continue;
        }
        SubgraphExtraction out;
        out.original_ids = chosen.to_vector();
        std::vector<Vertex> index(g.universe(), 0);
        for (std::size_t i = 0; i < out.original_ids.size(); i++) {
            index[out.original_ids[i]] = static_cast<Vertex>(i);
        }
        out.graph = Graph(k);
        std::vector<std::uint8_t> labels(k);
        for (std::size_t i = 0; i < k; i++) {
            const Vertex v = out.original_ids[i];
            labels[i] = color[v];
            (g.neighbors(v) & chosen).for_each([&](Vertex u) {
                if (u > v) {
                    out.graph.add_edge(static_cast<Vertex>(i), index[u]);
                }
            });
        }
        out.bipartition = refresh_bipartition(out.graph, labels);
        return out;
    }
    throw ValidationError("no connected bipartite induced subgraph on " + std::to_string(k) + " vertices within " +
                          std::to_string(max_restarts) + " restarts; best size " + std::to_string(best_size));
}

}  // namespace rvm
