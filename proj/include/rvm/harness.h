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
#include <iosfwd>
#include <string>
#include <vector>

#include "rvm/extraction.h"
#include "rvm/stats.h"
#include "rvm/topology.h"

namespace rvm {

/// One topology axis of a sweep.
struct TopologySweep {
    Family family = Family::kRandomBipartite;
    /// Partition sizes for random_bipartite.
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    /// Node count of the Internet-like graph and the size of the bipartite
    /// subgraph analyzed from it.
    std::size_t nodes = 50;
    std::size_t subgraph = 30;
    /// Edge counts (attachment counts for barabasi_albert). Empty for
    /// random_bipartite means `m_points` evenly spaced values over the valid range.
    std::vector<std::size_t> densities;
    double offset = 1.0;
    double retain = 0.5;
};

struct ExperimentConfig {
    std::string name = "experiment";
    std::vector<TopologySweep> topologies;
    std::vector<std::size_t> n_values{2};
    std::size_t instances = 200;
    std::uint64_t seed_base = 0;
    std::size_t restarts = 1;
    bool both_partitions = false;
    std::size_t m_points = 20;
    /// 0 picks REMOTE_VM_THREADS or the hardware concurrency.
    std::size_t threads = 0;
    bool include_runtime = false;
    std::string records_csv;
    std::string records_jsonl;
    std::string summary_csv;
    std::string peaks_csv;
};

void validate(const ExperimentConfig &cfg);

/// `points` evenly spaced, deduplicated edge counts over [n1+n2-1, n1*n2].
std::vector<std::size_t> m_grid(std::size_t n1, std::size_t n2, std::size_t points);

/// Densities actually swept for one axis.
std::vector<std::size_t> sweep_densities(const TopologySweep &t, std::size_t m_points);

struct ExperimentRecord {
    std::string family;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t nodes = 0;
    std::size_t density = 0;
    /// Edges of the generated topology.
    std::size_t m = 0;
    /// Edges and vertices of the bipartite graph handed to the extraction.
    std::size_t sub_m = 0;
    std::size_t num_vertices = 0;
    std::size_t instance = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t r_ell = 0;
    std::size_t r_tilde = 0;
    /// Largest star degree after forcing, as reported by the extraction.
    std::size_t n_ell_max = 0;
    /// Delta and alpha of the analyzed graph.
    std::size_t n_max_lower = 0;
    std::size_t n_max_upper = 0;
    std::size_t upper_volume = 0;
    double runtime_ms = 0.0;
    OpCounts ops;
    std::string error;

    bool operator==(const ExperimentRecord &) const = default;
};

struct SweepOutcome {
    std::vector<ExperimentRecord> records;
    std::size_t failed_instances = 0;
    std::size_t total_instances = 0;

    /// More than half of the instances errored.
    bool failed() const {
        return 2 * failed_instances > total_instances;
    }
};

std::size_t resolve_threads(std::size_t requested);

/// Records are ordered by (axis, density, instance, n) whatever the thread
/// count.
SweepOutcome run_sweep(const ExperimentConfig &cfg);

struct SummaryRow {
    std::string family;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t nodes = 0;
    std::size_t density = 0;
    std::size_t n = 0;
    std::size_t errors = 0;
    SummaryStats m;
    SummaryStats sub_m;
    SummaryStats r_ell;
    SummaryStats r_tilde;
    SummaryStats n_max_lower;
    SummaryStats n_max_upper;
    SummaryStats upper_volume;
};

/// One row per (topology, density, n) cell in first-seen order. Errored
/// records count towards `errors` only.
std::vector<SummaryRow> aggregate(const std::vector<ExperimentRecord> &records);

struct PeakRow {
    std::string family;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t nodes = 0;
    std::size_t n = 0;
    std::size_t best_density = 0;
    double peak_mean_r_ell = 0.0;
};

/// Maximum of the mean r_ell curve over the density sweep, per topology and n.
std::vector<PeakRow> peak_over_density(const std::vector<SummaryRow> &rows);

void write_records_csv(std::ostream &out, const std::vector<ExperimentRecord> &records, bool include_runtime);
void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows);
void write_peaks_csv(std::ostream &out, const std::vector<PeakRow> &rows);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace rvm
