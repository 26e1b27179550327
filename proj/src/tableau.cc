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

#include "rvm/tableau.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "rvm/rng.h"

namespace rvm {

namespace {

constexpr std::size_t kGraphGuard = 24;

std::uint64_t bit(Vertex q) {
    return std::uint64_t{1} << q;
}

std::uint64_t mask_of(const VertexSet &s) {
    std::uint64_t m = 0;
    s.for_each([&](Vertex v) {
        if (v >= Tableau::kMaxQubits) {
            throw ValidationError("tableau supports at most 64 qubit ids");
        }
        m |= bit(v);
    });
    return m;
}

PauliRow single_qubit(Vertex q, PauliBasis basis) {
    PauliRow p;
    if (basis != PauliBasis::kZ) {
        p.x = bit(q);
    }
    if (basis != PauliBasis::kX) {
        p.z = bit(q);
    }
    return p;
}

// Exponent of i picked up when multiplying the single-qubit Paulis
// (x1,z1)*(x2,z2), following the Aaronson-Gottesman convention.
int phase_exponent(int x1, int z1, int x2, int z2) {
    if (x1 == 0 && z1 == 0) {
        return 0;
    }
    if (x1 == 1 && z1 == 1) {
        return z2 - x2;
    }
    if (x1 == 1) {
        return z2 * (2 * x2 - 1);
    }
    return x2 * (1 - 2 * z2);
}

}  // namespace

bool commute(const PauliRow &a, const PauliRow &b) {
    return std::popcount((a.x & b.z) ^ (a.z & b.x)) % 2 == 0;
}

PauliRow multiply(const PauliRow &a, const PauliRow &b) {
    int total = 2 * (a.negative ? 1 : 0) + 2 * (b.negative ? 1 : 0);
    std::uint64_t touched = (a.x | a.z) & (b.x | b.z);
    while (touched != 0) {
        int q = std::countr_zero(touched);
        touched &= touched - 1;
        total += phase_exponent(static_cast<int>((a.x >> q) & 1U), static_cast<int>((a.z >> q) & 1U),
                                static_cast<int>((b.x >> q) & 1U), static_cast<int>((b.z >> q) & 1U));
    }
    total = ((total % 4) + 4) % 4;
    if (total % 2 != 0) {
        throw std::logic_error("multiplied anticommuting Paulis");
    }
    return PauliRow{a.x ^ b.x, a.z ^ b.z, total == 2};
}

Tableau::Tableau(std::size_t qubits) : qubits_(qubits) {
    if (qubits > kMaxQubits) {
        throw ValidationError("tableau supports at most 64 qubits");
    }
    for (std::size_t q = 0; q < qubits; q++) {
        rows_.push_back(PauliRow{0, bit(static_cast<Vertex>(q)), false});
    }
}

Tableau::Tableau(std::size_t qubits, std::vector<PauliRow> rows) : qubits_(qubits), rows_(std::move(rows)) {
    if (qubits > kMaxQubits) {
        throw ValidationError("tableau supports at most 64 qubits");
    }
}

bool Tableau::is_valid() const {
    if (rows_.size() != qubits_) {
        return false;
    }
    for (std::size_t i = 0; i < rows_.size(); i++) {
        for (std::size_t j = i + 1; j < rows_.size(); j++) {
            if (!commute(rows_[i], rows_[j])) {
                return false;
            }
        }
    }
    // Independence: eliminate over the 2N-bit (x, z) vectors.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> vecs;
    for (const auto &r : rows_) {
        vecs.emplace_back(r.x, r.z);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * qubits_; col++) {
        auto has = [&](const std::pair<std::uint64_t, std::uint64_t> &v) {
            return col < qubits_ ? ((v.first >> col) & 1U) != 0 : ((v.second >> (col - qubits_)) & 1U) != 0;
        };
        std::size_t pivot = rank;
        while (pivot < vecs.size() && !has(vecs[pivot])) {
            pivot++;
        }
        if (pivot == vecs.size()) {
            continue;
        }
        std::swap(vecs[rank], vecs[pivot]);
        for (std::size_t i = 0; i < vecs.size(); i++) {
            if (i != rank && has(vecs[i])) {
                vecs[i].first ^= vecs[rank].first;
                vecs[i].second ^= vecs[rank].second;
            }
        }
        rank++;
    }
    return rank == qubits_;
}

Tableau tableau_from_graph(const Graph &g) {
    if (g.num_vertices() > kGraphGuard) {
        throw ValidationError("tableau simulation is limited to " + std::to_string(kGraphGuard) + " qubits, got " +
                              std::to_string(g.num_vertices()));
    }
    if (g.universe() > Tableau::kMaxQubits) {
        throw ValidationError("tableau simulation needs vertex ids below 64; relabel the graph");
    }
    Tableau t(g.universe());
    g.vertices().for_each([&](Vertex v) { t.rows()[v] = PauliRow{bit(v), mask_of(g.neighbors(v)), false}; });
    return t;
}

TableauMeasurement tableau_measure_full(const Tableau &t, Vertex q, PauliBasis basis, const OutcomePolicy &policy) {
    if (q >= t.qubits()) {
        throw ValidationError("qubit " + std::to_string(q) + " is outside the tableau");
    }
    TableauMeasurement out{t, 1, false};
    std::vector<PauliRow> &rows = out.state.rows();
    const PauliRow probe = single_qubit(q, basis);

    std::size_t anchor = rows.size();
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (!commute(rows[i], probe)) {
            if (anchor == rows.size()) {
                anchor = i;
            } else {
                rows[i] = multiply(rows[i], rows[anchor]);
            }
        }
    }

    if (anchor != rows.size()) {
        out.random = true;
        bool minus = false;
        if (policy.mode == OutcomeMode::kSampled) {
            minus = Rng(split_seed(policy.seed, q)).bernoulli(0.5);
        }
        out.outcome = minus ? -1 : 1;
        rows[anchor] = probe;
        rows[anchor].negative = minus;
    } else {
        // Deterministic: +-probe lies in the group. Find the combination.
        struct Combo {
            std::uint64_t x, z, used;
        };
        std::vector<Combo> basis_rows;
        for (std::size_t i = 0; i < rows.size(); i++) {
            basis_rows.push_back({rows[i].x, rows[i].z, bit(static_cast<Vertex>(i))});
        }
        Combo target{probe.x, probe.z, 0};
        std::size_t rank = 0;
        for (std::size_t col = 0; col < 2 * t.qubits(); col++) {
            auto has = [&](const Combo &c) {
                return col < t.qubits() ? ((c.x >> col) & 1U) != 0 : ((c.z >> (col - t.qubits())) & 1U) != 0;
            };
            std::size_t pivot = rank;
            while (pivot < basis_rows.size() && !has(basis_rows[pivot])) {
                pivot++;
            }
            if (pivot == basis_rows.size()) {
                continue;
            }
            std::swap(basis_rows[rank], basis_rows[pivot]);
            for (std::size_t i = 0; i < basis_rows.size(); i++) {
                if (i != rank && has(basis_rows[i])) {
                    basis_rows[i].x ^= basis_rows[rank].x;
                    basis_rows[i].z ^= basis_rows[rank].z;
                    basis_rows[i].used ^= basis_rows[rank].used;
                }
            }
            if (has(target)) {
                target.x ^= basis_rows[rank].x;
                target.z ^= basis_rows[rank].z;
                target.used ^= basis_rows[rank].used;
            }
            rank++;
        }
        if (target.x != 0 || target.z != 0 || target.used == 0) {
            throw std::logic_error("measured Pauli commutes with the state but is not a stabilizer");
        }
        PauliRow product;
        std::uint64_t used = target.used;
        anchor = static_cast<std::size_t>(std::countr_zero(used));
        while (used != 0) {
            int i = std::countr_zero(used);
            used &= used - 1;
            product = multiply(product, rows[static_cast<std::size_t>(i)]);
        }
        out.outcome = product.negative ? -1 : 1;
        rows[anchor] = product;
    }

    for (std::size_t i = 0; i < rows.size(); i++) {
        if (i != anchor && (((rows[i].x | rows[i].z) >> q) & 1U) != 0) {
            rows[i] = multiply(rows[i], rows[anchor]);
        }
    }
    return out;
}

std::optional<std::vector<PauliRow>> restrict_to(const Tableau &t, const VertexSet &keep) {
    const std::uint64_t inside = mask_of(keep);
    const std::uint64_t full = t.qubits() == 64 ? ~std::uint64_t{0} : bit(static_cast<Vertex>(t.qubits())) - 1;
    const std::uint64_t outside = full & ~inside;
    std::vector<PauliRow> rows = t.rows();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * 64; col++) {
        const bool on_x = col < 64;
        const std::uint64_t b = bit(static_cast<Vertex>(col % 64));
        if ((outside & b) == 0) {
            continue;
        }
        auto has = [&](const PauliRow &r) { return ((on_x ? r.x : r.z) & b) != 0; };
        std::size_t pivot = rank;
        while (pivot < rows.size() && !has(rows[pivot])) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); i++) {
            if (has(rows[i])) {
                rows[i] = multiply(rows[i], rows[rank]);
            }
        }
        rank++;
    }
    std::vector<PauliRow> local(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end());
    if (local.size() != keep.size()) {
        return std::nullopt;
    }
    return local;
}

Graph graph_form(const std::vector<PauliRow> &input, const VertexSet &support) {
    const std::uint64_t inside = mask_of(support);
    const std::vector<Vertex> cols = support.to_vector();
    if (input.size() != cols.size()) {
        throw ValidationError("graph form needs one generator per supported qubit");
    }
    std::vector<PauliRow> rows = input;
    for (const auto &r : rows) {
        if (((r.x | r.z) & ~inside) != 0) {
            throw ValidationError("generator acts outside the requested support");
        }
    }
    auto eliminate = [&](std::size_t from, bool on_x, const std::vector<Vertex> &columns,
                         std::vector<Vertex> *pivots) {
        std::size_t rank = from;
        for (Vertex c : columns) {
            auto has = [&](const PauliRow &r) { return (((on_x ? r.x : r.z) >> c) & 1U) != 0; };
            std::size_t pivot = rank;
            while (pivot < rows.size() && !has(rows[pivot])) {
                pivot++;
            }
            if (pivot == rows.size()) {
                continue;
            }
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t i = 0; i < rows.size(); i++) {
                if (i != rank && has(rows[i])) {
                    rows[i].x ^= rows[rank].x;
                    rows[i].z ^= rows[rank].z;
                }
            }
            if (pivots != nullptr) {
                pivots->push_back(c);
            }
            rank++;
        }
        return rank;
    };

    std::vector<Vertex> x_pivots;
    const std::size_t x_rank = eliminate(0, true, cols, &x_pivots);
    if (x_rank < cols.size()) {
        // Z-only rows have full rank on the non-pivot columns; Hadamards there
        // make the X block invertible.
        std::vector<Vertex> rest;
        for (Vertex c : cols) {
            if (std::find(x_pivots.begin(), x_pivots.end(), c) == x_pivots.end()) {
                rest.push_back(c);
            }
        }
        std::vector<Vertex> z_pivots;
        eliminate(x_rank, false, rest, &z_pivots);
        for (Vertex c : z_pivots) {
            for (auto &r : rows) {
                const std::uint64_t xb = (r.x >> c) & 1U;
                const std::uint64_t zb = (r.z >> c) & 1U;
                r.x = (r.x & ~bit(c)) | (zb << c);
                r.z = (r.z & ~bit(c)) | (xb << c);
            }
        }
        std::vector<Vertex> all_pivots;
        if (eliminate(0, true, cols, &all_pivots) != cols.size()) {
            throw std::logic_error("X block stayed singular after Hadamards");
        }
    }
    // Now rows[i] has X part e_{cols[i]}.
    Graph out(support.universe());
    for (std::size_t i = 0; i < cols.size(); i++) {
        if (rows[i].x != bit(cols[i])) {
            throw std::logic_error("graph-form reduction did not reach the identity X block");
        }
        for (std::size_t j = i + 1; j < cols.size(); j++) {
            const bool ij = ((rows[i].z >> cols[j]) & 1U) != 0;
            const bool ji = ((rows[j].z >> cols[i]) & 1U) != 0;
            if (ij != ji) {
                throw std::logic_error("graph-form adjacency is not symmetric");
            }
            if (ij) {
                out.add_edge(cols[i], cols[j]);
            }
        }
    }
    out.remove_vertices_in_place(out.vertices() - support);
    return out;
}

Graph graph_form(const Tableau &t, const VertexSet &keep) {
    auto local = restrict_to(t, keep);
    if (!local) {
        throw ValidationError("state does not factor across " + to_string(keep));
    }
    return graph_form(*local, keep);
}

}  // namespace rvm
