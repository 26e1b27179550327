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
#include <optional>
#include <vector>

#include "rvm/graph.h"
#include "rvm/measurement.h"

namespace rvm {

/// One stabilizer generator. Bit q of (x, z) encodes the Pauli on qubit q:
/// (1,0)=X, (0,1)=Z, (1,1)=Y.
struct PauliRow {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    bool negative = false;

    bool operator==(const PauliRow &) const = default;
};

bool commute(const PauliRow &a, const PauliRow &b);

/// Product a*b of two commuting Paulis with the sign tracked exactly.
PauliRow multiply(const PauliRow &a, const PauliRow &b);

/// Stabilizer state on up to 64 qubits, indexed by vertex id.
class Tableau {
   public:
    static constexpr std::size_t kMaxQubits = 64;

    Tableau() = default;
    /// |0...0>.
    explicit Tableau(std::size_t qubits);
    Tableau(std::size_t qubits, std::vector<PauliRow> rows);

    std::size_t qubits() const {
        return qubits_;
    }
    const std::vector<PauliRow> &rows() const {
        return rows_;
    }
    std::vector<PauliRow> &rows() {
        return rows_;
    }

    /// Rows pairwise commute and are independent over GF(2), with one row per
    /// qubit.
    bool is_valid() const;

   private:
    std::size_t qubits_ = 0;
    std::vector<PauliRow> rows_;
};

/// Generators X_v prod_{u in N(v)} Z_u for live vertices; dead ids are |0>.
Tableau tableau_from_graph(const Graph &g);

enum class OutcomeMode : std::uint8_t { kDeterministicPlus, kSampled };

struct OutcomePolicy {
    OutcomeMode mode = OutcomeMode::kDeterministicPlus;
    std::uint64_t seed = 0;
};

struct TableauMeasurement {
    Tableau state;
    /// +1 or -1.
    int outcome = 1;
    bool random = false;
};

/// Measures qubit q in the given basis. Afterwards row set contains +-P_q and
/// no other row acts on q.
TableauMeasurement tableau_measure_full(const Tableau &t, Vertex q, PauliBasis basis,
                                        const OutcomePolicy &policy = {});

inline Tableau tableau_measure(const Tableau &t, Vertex q, PauliBasis basis, const OutcomePolicy &policy = {}) {
    return tableau_measure_full(t, q, basis, policy).state;
}

/// Generators of the subgroup supported inside `keep`, or nullopt when the
/// state does not factor across keep and its complement.
std::optional<std::vector<PauliRow>> restrict_to(const Tableau &t, const VertexSet &keep);

/// Graph state LC-equivalent to the stabilizer group generated by `rows`,
/// which must act only inside `support` and have |support| generators.
Graph graph_form(const std::vector<PauliRow> &rows, const VertexSet &support);

/// Graph form of the whole tableau restricted to `keep`; throws if the state
/// does not factor.
Graph graph_form(const Tableau &t, const VertexSet &keep);

}  // namespace rvm
