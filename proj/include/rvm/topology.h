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
#include <string>
#include <vector>

#include "rvm/graph.h"

namespace rvm {

enum class Family : std::uint8_t { kRandomBipartite, kBarabasiAlbert, kAsLike, kPpiLike, kBipartiteNet };

std::string to_string(Family f);
Family parse_family(const std::string &text);

struct BipartiteInstance {
    Graph graph;
    Bipartition bipartition;
};

/// Ids 0..n1-1 form the first partition. A random alternating spanning tree
/// comes first, then the remaining m-(n1+n2-1) edges are drawn uniformly from
/// the cross pairs not yet used.
BipartiteInstance gen_random_bipartite(std::size_t n1, std::size_t n2, std::size_t m, std::uint64_t seed);

/// Valid edge range [n1+n2-1, n1*n2] for a connected bipartite graph.
std::pair<std::size_t, std::size_t> bipartite_edge_range(std::size_t n1, std::size_t n2);

/// Knobs for the Internet-inspired families.
///   barabasi_albert: `density` = edges per new node k (seed clique of k nodes).
///   as_like:         `density` = target edge count; attachment weight degree + offset.
///   ppi_like:        `density` = target edge count; duplication-divergence with
///                    retention `retain`, then trimmed or topped up uniformly.
///   bipartite_net:   `density` = target edge count of a random bipartite graph
///                    on n/2 + (n - n/2) nodes, clamped to its valid range.
struct InternetParams {
    Family family = Family::kBarabasiAlbert;
    std::size_t n = 50;
    std::size_t density = 2;
    double offset = 1.0;
    double retain = 0.5;
};

Graph gen_internet_like(const InternetParams &params, std::uint64_t seed);

struct SubgraphExtraction {
    Graph graph;
    Bipartition bipartition;
    /// original_ids[i] is the id in the source graph of new vertex i.
    std::vector<Vertex> original_ids;
};

/// Connected induced bipartite subgraph on k vertices grown by randomized BFS
/// with on-the-fly 2-coloring. New ids follow increasing original id.
SubgraphExtraction extract_bipartite_subgraph(const Graph &g, std::size_t k, std::uint64_t seed,
                                              std::size_t max_restarts = 64);

}  // namespace rvm
