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

#include <cstddef>

#include "rvm/graph.h"

namespace rvm {

/// Size of a maximum matching of a bipartite graph (augmenting paths).
std::size_t maximum_matching_size(const Graph &g, const Bipartition &b);

/// alpha(G) = |V| - nu(G) for bipartite graphs (Koenig).
std::size_t independence_number_bipartite(const Graph &g, const Bipartition &b);

/// Exact alpha(G) by branch and bound over 64-bit masks; requires at most 64
/// live vertices.
std::size_t independence_number_branch_and_bound(const Graph &g);

/// Minimum-degree greedy independent set size; a lower estimate of alpha(G).
std::size_t independence_number_greedy(const Graph &g);

}  // namespace rvm
