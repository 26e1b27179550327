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

#include "rvm/graph.h"

namespace rvm {

/// True iff the graph states |a> and |b> on the same live vertex set are
/// related by local Clifford unitaries. Exact: solves the GF(2) linear system
/// for per-vertex 2x2 symplectic blocks and searches the invertible choices.
/// Graphs with different live vertex sets are never equivalent.
bool lc_equivalent(const Graph &a, const Graph &b);

/// Star on `center` plus `leaves` over the given universe, all other ids dead.
Graph star_graph(std::size_t universe, Vertex center, const std::vector<Vertex> &leaves);

}  // namespace rvm
