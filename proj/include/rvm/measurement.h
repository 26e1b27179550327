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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvm/graph.h"

namespace rvm {

enum class PauliBasis : std::uint8_t { kX, kY, kZ };

char basis_char(PauliBasis b);
PauliBasis parse_basis(const std::string &text);

/// Graph rule for a Pauli-Z measurement: the vertex is deleted.
Graph measure_z(const Graph &g, Vertex v);
/// Graph rule for a Pauli-Y measurement: tau_v, then delete v. N(v) becomes a
/// clique.
Graph measure_y(const Graph &g, Vertex v);
/// Graph rule for a Pauli-X measurement with special neighbor k0 in N(v):
/// tau_k0(tau_v(tau_k0(g)) - v).
Graph measure_x(const Graph &g, Vertex v, Vertex k0);

struct MeasurementStep {
    Vertex vertex = 0;
    PauliBasis basis = PauliBasis::kZ;
    /// Required iff basis is X.
    std::optional<Vertex> special_neighbor;

    bool operator==(const MeasurementStep &) const = default;
};

/// One extracted GHZ resource: a star with `center` and `leaves`.
struct StarComponent {
    Vertex center = 0;
    std::vector<Vertex> leaves;

    bool operator==(const StarComponent &) const = default;
};

struct MeasurementPlan {
    std::vector<MeasurementStep> steps;
    std::vector<Vertex> centers;
    std::vector<StarComponent> components;

    bool operator==(const MeasurementPlan &) const = default;
};

/// Raised when a plan cannot be applied or its result diverges from the
/// components it promises.
class ScheduleError : public std::runtime_error {
   public:
    ScheduleError(const std::string &what, std::optional<StarComponent> divergent = std::nullopt)
        : std::runtime_error(what), divergent_(std::move(divergent)) {
    }
    const std::optional<StarComponent> &divergent_component() const {
        return divergent_;
    }

   private:
    std::optional<StarComponent> divergent_;
};

Graph apply_step(const Graph &g, const MeasurementStep &step);

/// Measurement schedule extracting one GHZ star per member of `centers`.
///
/// Z on every vertex of the centers' partition except the centers and one
/// star s_own, Z on every vertex of the opposite partition outside the union
/// of the centers' remote sets except one star s_opp, then X on s_opp and X on
/// s_own, both with k0 = the smallest center. Each center ends up joined to
/// exactly its opposite remote set in `g`.
///
/// Throws ValidationError if `centers` is empty, straddles partitions, or
/// fails the disjoint remote-set condition (the message names the clause).
MeasurementPlan build_schedule(const Graph &g, const Bipartition &b, const VertexSet &centers);

/// Applies every step, then checks the surviving graph is exactly the disjoint
/// union of the plan's star components (skipped when the plan has none).
Graph apply_schedule(const Graph &g, const MeasurementPlan &plan);

}  // namespace rvm
