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
#include "rvm/measurement.h"

namespace rvm {

struct OracleReport {
    /// Largest center set satisfying the disjoint remote-set condition.
    std::size_t max_a = 0;
    /// Largest set satisfying the shared-intersection condition.
    std::size_t max_b = 0;
    std::size_t theoretical_lower = 0;
    /// Argmax sets: the disjoint witness first, then the shared one (either
    /// may be empty).
    std::vector<VertexSet> witness_sets;
    std::uint64_t enumerated = 0;
};

/// Exhaustive maxima over subsets of the non-star vertices of `side`, taken on
/// the graph after star forcing (the graph the heuristic searches).
OracleReport exact_condition_maxima(const Graph &g, const Bipartition &b, std::size_t n, Side side = Side::kFirst);

std::size_t exact_alpha(const Graph &g);

struct VerifyReport {
    bool ok = false;
    std::string reason;
};

/// Replays the plan on the stabilizer tableau of |g> and checks each expected
/// component is a GHZ state (LC-equivalent to its star) in a product with
/// the rest.
VerifyReport verify_schedule_report(const Graph &g, const MeasurementPlan &plan);

inline bool verify_schedule(const Graph &g, const MeasurementPlan &plan) {
    return verify_schedule_report(g, plan).ok;
}

}  // namespace rvm
