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

#include "rvm/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <map>
#include <ostream>
#include <thread>
#include <tuple>

#include "rvm/conditions.h"
#include "rvm/rng.h"

namespace rvm {

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

struct Task {
    std::size_t axis;
    std::size_t density;
    std::size_t instance;
};

struct Analyzed {
    Graph graph;
    Bipartition bipartition;
    std::size_t m = 0;
};

Analyzed build_instance(const TopologySweep &t, std::size_t density, std::uint64_t seed) {
    if (t.family == Family::kRandomBipartite) {
        BipartiteInstance inst = gen_random_bipartite(t.n1, t.n2, density, seed);
        const std::size_t m = inst.graph.num_edges();
        return {std::move(inst.graph), std::move(inst.bipartition), m};
    }
    InternetParams p;
    p.family = t.family;
    p.n = t.nodes;
    p.density = density;
    p.offset = t.offset;
    p.retain = t.retain;
    Graph g = gen_internet_like(p, seed);
    SubgraphExtraction sub = extract_bipartite_subgraph(g, t.subgraph, seed);
    return {std::move(sub.graph), std::move(sub.bipartition), g.num_edges()};
}

std::vector<ExperimentRecord> run_task(const ExperimentConfig &cfg, const Task &task) {
    const TopologySweep &t = cfg.topologies[task.axis];
    ExperimentRecord base;
    base.family = to_string(t.family);
    base.n1 = t.n1;
    base.n2 = t.n2;
    base.nodes = t.family == Family::kRandomBipartite ? t.n1 + t.n2 : t.nodes;
    base.density = task.density;
    base.instance = task.instance;
    base.seed = split_seed(cfg.seed_base, task.instance);

    std::vector<ExperimentRecord> out;
    try {
        Analyzed a = build_instance(t, task.density, base.seed);
        base.m = a.m;
        base.sub_m = a.graph.num_edges();
        base.num_vertices = a.graph.num_vertices();
        BoundsReport bounds = mass_bounds(a.graph);
        base.n_max_lower = bounds.n_max_lower;
        base.n_max_upper = bounds.n_max_upper;
        for (std::size_t n : cfg.n_values) {
            ExperimentRecord r = base;
            r.n = n;
            r.upper_volume = n <= base.num_vertices ? base.num_vertices / n : 0;
            ExtractionOptions opt;
            opt.n = n;
            opt.seed = base.seed;
            opt.restarts = cfg.restarts;
            opt.both_partitions = cfg.both_partitions;
            const auto start = std::chrono::steady_clock::now();
            ExtractionResult res = remote_extraction(a.graph, a.bipartition, opt);
            r.runtime_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            r.r_ell = res.volume;
            r.r_tilde = res.r_tilde;
            r.n_ell_max = res.n_max_lower;
            r.ops = res.ops;
            out.push_back(std::move(r));
        }
    } catch (const std::exception &e) {
        out.clear();
        for (std::size_t n : cfg.n_values) {
            ExperimentRecord r = base;
            r.n = n;
            r.error = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

void write_stats_header(std::ostream &out, const std::string &metric) {
    for (const char *suffix : {"mean", "std", "ci_low", "ci_high", "min", "max"}) {
        out << ',' << metric << '_' << suffix;
    }
}

void write_stats(std::ostream &out, const SummaryStats &s) {
    for (double v : {s.mean, s.stddev, s.ci_low, s.ci_high, s.min, s.max}) {
        out << ',' << format_double(v);
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void validate(const ExperimentConfig &cfg) {
    if (cfg.instances < 1) {
        throw ValidationError("instances must be at least 1");
    }
    if (cfg.n_values.empty()) {
        throw ValidationError("n_values must not be empty");
    }
    for (std::size_t n : cfg.n_values) {
        if (n < 2) {
            throw ValidationError("every GHZ mass in n_values must be at least 2");
        }
    }
    if (cfg.restarts < 1) {
        throw ValidationError("restarts must be at least 1");
    }
    if (cfg.topologies.empty()) {
        throw ValidationError("config lists no topologies");
    }
    for (const TopologySweep &t : cfg.topologies) {
        if (t.family == Family::kRandomBipartite) {
            if (t.n1 == 0 || t.n2 == 0) {
                throw ValidationError("random_bipartite needs n1 and n2 >= 1");
            }
            auto [lo, hi] = bipartite_edge_range(t.n1, t.n2);
            for (std::size_t m : t.densities) {
                if (m < lo || m > hi) {
                    throw ValidationError("edge count " + std::to_string(m) + " outside [" + std::to_string(lo) +
                                          ", " + std::to_string(hi) + "]");
                }
            }
            if (t.densities.empty() && cfg.m_points < 1) {
                throw ValidationError("m_points must be at least 1");
            }
        } else {
            if (t.densities.empty()) {
                throw ValidationError(to_string(t.family) + " needs an explicit density list");
            }
            if (t.subgraph < 2 || t.subgraph > t.nodes) {
                throw ValidationError("subgraph size must lie in [2, nodes]");
            }
        }
    }
}

std::vector<std::size_t> m_grid(std::size_t n1, std::size_t n2, std::size_t points) {
    auto [lo, hi] = bipartite_edge_range(n1, n2);
    std::vector<std::size_t> out;
    if (points <= 1 || lo == hi) {
        return {lo};
    }
    for (std::size_t i = 0; i < points; i++) {
        const std::size_t m = lo + ((hi - lo) * i * 2 + (points - 1)) / (2 * (points - 1));
        if (out.empty() || out.back() != m) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<std::size_t> sweep_densities(const TopologySweep &t, std::size_t m_points) {
    if (t.family == Family::kRandomBipartite && t.densities.empty()) {
        return m_grid(t.n1, t.n2, m_points);
    }
    return t.densities;
}

std::size_t resolve_threads(std::size_t requested) {
    std::size_t n = requested;
    if (n == 0) {
        n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    if (const char *env = std::getenv("REMOTE_VM_THREADS")) {
        char *end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap > 0) {
            n = std::min<std::size_t>(n, cap);
        }
    }
    return std::max<std::size_t>(1, n);
}

SweepOutcome run_sweep(const ExperimentConfig &cfg) {
    validate(cfg);
    std::vector<Task> tasks;
    for (std::size_t axis = 0; axis < cfg.topologies.size(); axis++) {
        for (std::size_t d : sweep_densities(cfg.topologies[axis], cfg.m_points)) {
            for (std::size_t i = 0; i < cfg.instances; i++) {
                tasks.push_back({axis, d, i});
            }
        }
    }
    std::vector<std::vector<ExperimentRecord>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            slots[i] = run_task(cfg, tasks[i]);
        }
    };
    const std::size_t threads = std::min(resolve_threads(cfg.threads), std::max<std::size_t>(1, tasks.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    SweepOutcome out;
    out.total_instances = tasks.size();
    for (auto &slot : slots) {
        if (!slot.empty() && !slot.front().error.empty()) {
            out.failed_instances++;
        }
        for (auto &r : slot) {
            out.records.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<SummaryRow> aggregate(const std::vector<ExperimentRecord> &records) {
    if (records.empty()) {
        throw ValidationError("cannot aggregate an empty record set");
    }
    using Key = std::tuple<std::string, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;
    std::vector<Key> order;
    std::map<Key, std::vector<const ExperimentRecord *>> cells;
    for (const auto &r : records) {
        Key k{r.family, r.n1, r.n2, r.nodes, r.density, r.n};
        auto [it, fresh] = cells.try_emplace(k);
        if (fresh) {
            order.push_back(k);
        }
        it->second.push_back(&r);
    }
    std::vector<SummaryRow> rows;
    for (const Key &k : order) {
        const auto &cell = cells.at(k);
        SummaryRow row;
        std::tie(row.family, row.n1, row.n2, row.nodes, row.density, row.n) = k;
        std::vector<const ExperimentRecord *> ok;
        for (const auto *r : cell) {
            if (r->error.empty()) {
                ok.push_back(r);
            } else {
                row.errors++;
            }
        }
        if (ok.empty()) {
            rows.push_back(row);
            continue;
        }
        auto stat = [&](auto field) {
            std::vector<double> v;
            for (const auto *r : ok) {
                v.push_back(static_cast<double>(r->*field));
            }
            return summarize(v);
        };
        row.m = stat(&ExperimentRecord::m);
        row.sub_m = stat(&ExperimentRecord::sub_m);
        row.r_ell = stat(&ExperimentRecord::r_ell);
        row.r_tilde = stat(&ExperimentRecord::r_tilde);
        row.n_max_lower = stat(&ExperimentRecord::n_max_lower);
        row.n_max_upper = stat(&ExperimentRecord::n_max_upper);
        row.upper_volume = stat(&ExperimentRecord::upper_volume);
        rows.push_back(row);
    }
    return rows;
}

std::vector<PeakRow> peak_over_density(const std::vector<SummaryRow> &rows) {
    using Key = std::tuple<std::string, std::size_t, std::size_t, std::size_t, std::size_t>;
    std::vector<Key> order;
    std::map<Key, PeakRow> peaks;
    for (const auto &row : rows) {
        if (row.r_ell.count == 0) {
            continue;
        }
        Key k{row.family, row.n1, row.n2, row.nodes, row.n};
        auto it = peaks.find(k);
        if (it == peaks.end()) {
            order.push_back(k);
            peaks.emplace(k, PeakRow{row.family, row.n1, row.n2, row.nodes, row.n, row.density, row.r_ell.mean});
        } else if (row.r_ell.mean > it->second.peak_mean_r_ell) {
            it->second.best_density = row.density;
            it->second.peak_mean_r_ell = row.r_ell.mean;
        }
    }
    std::vector<PeakRow> out;
    for (const Key &k : order) {
        out.push_back(peaks.at(k));
    }
    return out;
}

void write_records_csv(std::ostream &out, const std::vector<ExperimentRecord> &records, bool include_runtime) {
    out << "family,n1,n2,nodes,density,m,sub_m,num_vertices,instance,seed,n,r_ell,r_tilde,n_ell_max,n_max_lower,"
           "n_max_upper,upper_volume,ops_step1,ops_step2_initial,ops_expand,ops_refine,ops_total";
    if (include_runtime) {
        out << ",runtime_ms";
    }
    out << ",error\r\n";
    for (const auto &r : records) {
        out << csv_field(r.family) << ',' << r.n1 << ',' << r.n2 << ',' << r.nodes << ',' << r.density << ',' << r.m
            << ',' << r.sub_m << ',' << r.num_vertices << ',' << r.instance << ',' << r.seed << ',' << r.n << ','
            << r.r_ell << ',' << r.r_tilde << ',' << r.n_ell_max << ',' << r.n_max_lower << ',' << r.n_max_upper
            << ',' << r.upper_volume << ',' << r.ops.step1 << ',' << r.ops.step2_initial << ',' << r.ops.expand
            << ',' << r.ops.refine << ',' << r.ops.total();
        if (include_runtime) {
            out << ',' << format_double(r.runtime_ms);
        }
        out << ',' << csv_field(r.error) << "\r\n";
    }
}

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows) {
    out << "family,n1,n2,nodes,density,n,count,errors";
    for (const char *metric : {"m", "sub_m", "r_ell", "r_tilde", "n_max_lower", "n_max_upper", "upper_volume"}) {
        write_stats_header(out, metric);
    }
    out << "\r\n";
    for (const auto &row : rows) {
        out << csv_field(row.family) << ',' << row.n1 << ',' << row.n2 << ',' << row.nodes << ',' << row.density << ','
            << row.n << ',' << row.r_ell.count << ',' << row.errors;
        for (const SummaryStats *s : {&row.m, &row.sub_m, &row.r_ell, &row.r_tilde, &row.n_max_lower,
                                      &row.n_max_upper, &row.upper_volume}) {
            write_stats(out, *s);
        }
        out << "\r\n";
    }
}

void write_peaks_csv(std::ostream &out, const std::vector<PeakRow> &rows) {
    out << "family,n1,n2,nodes,n,best_density,peak_mean_r_ell\r\n";
    for (const auto &p : rows) {
        out << csv_field(p.family) << ',' << p.n1 << ',' << p.n2 << ',' << p.nodes << ',' << p.n << ','
            << p.best_density << ',' << format_double(p.peak_mean_r_ell) << "\r\n";
    }
}

}  // namespace rvm
