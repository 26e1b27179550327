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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvm/graph.h"
#include "rvm/measurement.h"

namespace rvm {

/// Elementary-operation tallies. Every set-algebra operation is charged the
/// size of the opposite partition of the run, the cost of one scan over it.
struct OpCounts {
    std::uint64_t step1 = 0;
    std::uint64_t step2_initial = 0;
    std::uint64_t expand = 0;
    std::uint64_t refine = 0;

    std::uint64_t total() const {
        return step1 + step2_initial + expand + refine;
    }
    OpCounts &operator+=(const OpCounts &o) {
        step1 += o.step1;
        step2_initial += o.step2_initial;
        expand += o.expand;
        refine += o.refine;
        return *this;
    }
    bool operator==(const OpCounts &) const = default;
};

struct TraceEvent {
    std::string kind;
    std::int64_t value = -1;
    std::vector<Vertex> vertices;

    bool operator==(const TraceEvent &) const = default;
};

struct MassStep {
    Graph graph;
    Bipartition bipartition;
    /// n^l_max: largest degree over S1 and S2 after forcing.
    std::size_t n_max_lower = 0;
    std::vector<TraceEvent> events;
};

/// Forces a star vertex into every partition lacking one.
MassStep step1_mass(const Graph &g, const Bipartition &b, OpCounts *ops = nullptr);

/// Seeded visiting order over vertex ids (Fisher-Yates).
std::vector<Vertex> seeded_order(std::size_t universe, std::uint64_t seed);

struct InitialStep {
    Graph graph;
    Bipartition bipartition;
    /// The initial center set; |a_tilde| is r-tilde.
    VertexSet a_tilde;
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    bool used_shared_intersection = false;
    VertexSet removed;
};

/// Greedy disjoint set A_g and shared-intersection set B_g over the seeded
/// order of the non-star vertices of `side`. If |B_g| > |A_g| the common remote
/// set of B_g is deleted and B_g becomes the center set.
InitialStep step2_initial(const Graph &g, const Bipartition &b, Side side, std::size_t n, std::uint64_t seed,
                          OpCounts *ops = nullptr);

struct ExpansionState {
    Graph working_graph;
    Bipartition bipartition;
    Side side = Side::kFirst;
    VertexSet a_tilde;

    VertexSet a_bar;
    /// A(v): defined only for candidates whose pairings all satisfy the
    /// shared-intersection condition and that dominate at most one center.
    std::map<Vertex, VertexSet> map_a;
    std::map<Vertex, VertexSet> map_b2a;
    std::map<Vertex, VertexSet> map_abar2a;
};

/// Recomputes A-bar, B2A, A-bar2A and A against the working graph.
ExpansionState expand_a(ExpansionState state, std::size_t n, OpCounts *ops = nullptr);

struct RefineResult {
    Graph graph;
    Bipartition bipartition;
    VertexSet a_hat;
    std::vector<TraceEvent> events;
};

/// Grows the center set until A is exhausted: add candidates whose remote set
/// touches no center, otherwise delete the overlap with A(v) and add v, or
/// swap out the single center v dominates. Visits candidates in `order`.
RefineResult step2_refine(const Graph &g, const Bipartition &b, Side side, const VertexSet &a_tilde, std::size_t n,
                          const std::vector<Vertex> &order, OpCounts *ops = nullptr);

struct ExtractionOptions {
    std::size_t n = 2;
    std::uint64_t seed = 0;
    bool both_partitions = false;
    std::size_t restarts = 1;
};

struct ExtractionResult {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    Side side = Side::kFirst;
    std::size_t n_max_lower = 0;
    /// r^l_g(n) = |locations|.
    std::size_t volume = 0;
    /// r-tilde_g(n), the initial estimate of the winning run.
    std::size_t r_tilde = 0;
    std::vector<StarComponent> locations;
    /// Applies to the input graph: Z on every vertex the algorithm deleted,
    /// then the extraction schedule for the final centers.
    MeasurementPlan schedule;
    std::vector<TraceEvent> trace;
    OpCounts ops;

    bool operator==(const ExtractionResult &) const = default;
};

/// The full heuristic: star forcing, initial estimate, refinement, and
/// location map. Deterministic in (g, b, options).
ExtractionResult remote_extraction(const Graph &g, const Bipartition &b, const ExtractionOptions &options);

inline ExtractionResult remote_extraction(const Graph &g, const Bipartition &b, std::size_t n, std::uint64_t seed) {
    ExtractionOptions options;
    options.n = n;
    options.seed = seed;
    return remote_extraction(g, b, options);
}

/// Raised when the refined center set stops satisfying the disjoint
/// remote-set condition. Carries the decision trace.
class InvariantBreach : public std::logic_error {
   public:
    InvariantBreach(const std::string &what, std::vector<TraceEvent> trace)
        : std::logic_error(what), trace_(std::move(trace)) {
    }
    const std::vector<TraceEvent> &trace() const {
        return trace_;
    }

   private:
    std::vector<TraceEvent> trace_;
};

}  // namespace rvm
