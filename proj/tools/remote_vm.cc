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

// remote_vm: command-line front end for remote GHZ extraction on two-colorable
// graph states.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rvm/io.h"
#include "rvm/oracle.h"
#include "rvm/topology.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitPartial = 3;

void emit(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        rvm::write_text_file(path, content);
    }
}

std::string dump(const rvm::Json &j) {
    return j.dump(2) + "\n";
}

struct GenerateArgs {
    std::string family = "bipartite";
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t m = 0;
    std::size_t nodes = 50;
    std::size_t density = 2;
    std::size_t subgraph = 0;
    double offset = 1.0;
    double retain = 0.5;
    std::uint64_t seed = 0;
    std::string out;
};

int run_generate(const GenerateArgs &a) {
    const rvm::Family family = rvm::parse_family(a.family);
    if (family == rvm::Family::kRandomBipartite) {
        auto inst = rvm::gen_random_bipartite(a.n1, a.n2, a.m, a.seed);
        emit(a.out, dump(rvm::graph_to_json(inst.graph, &inst.bipartition)));
        return 0;
    }
    rvm::InternetParams p;
    p.family = family;
    p.n = a.nodes;
    p.density = a.density;
    p.offset = a.offset;
    p.retain = a.retain;
    rvm::Graph g = rvm::gen_internet_like(p, a.seed);
    if (a.subgraph == 0) {
        emit(a.out, dump(rvm::graph_to_json(g)));
        return 0;
    }
    auto sub = rvm::extract_bipartite_subgraph(g, a.subgraph, a.seed);
    rvm::Json j = rvm::graph_to_json(sub.graph, &sub.bipartition);
    j["original_ids"] = sub.original_ids;
    j["source_edges"] = g.num_edges();
    emit(a.out, dump(j));
    return 0;
}

struct ExtractArgs {
    std::string graph;
    std::size_t n = 2;
    std::uint64_t seed = 0;
    bool both = false;
    std::size_t restarts = 1;
    std::string out;
};

int run_extract(const ExtractArgs &a) {
    rvm::GraphFile f = rvm::read_graph_file(a.graph);
    rvm::Bipartition b = rvm::bipartition_for(f);
    rvm::ExtractionOptions opt;
    opt.n = a.n;
    opt.seed = a.seed;
    opt.both_partitions = a.both;
    opt.restarts = a.restarts;
    emit(a.out, dump(rvm::extraction_to_json(rvm::remote_extraction(f.graph, b, opt))));
    return 0;
}

int run_bounds(const std::string &graph, std::size_t n) {
    rvm::GraphFile f = rvm::read_graph_file(graph);
    rvm::BoundsReport r = rvm::mass_bounds(f.graph);
    rvm::Json j = rvm::bounds_to_json(r);
    if (n > 0) {
        j["n"] = n;
        j["volume_upper"] = r.volume_upper(n);
    }
    emit("", dump(j));
    return 0;
}

int run_oracle_exact(const std::string &graph, std::size_t n, int side) {
    rvm::GraphFile f = rvm::read_graph_file(graph);
    rvm::Bipartition b = rvm::bipartition_for(f);
    auto report = rvm::exact_condition_maxima(f.graph, b, n, side == 2 ? rvm::Side::kSecond : rvm::Side::kFirst);
    rvm::Json j = rvm::oracle_to_json(report);
    j["alpha"] = rvm::exact_alpha(f.graph);
    emit("", dump(j));
    return 0;
}

int run_oracle_verify(const std::string &graph, const std::string &plan_path) {
    rvm::GraphFile f = rvm::read_graph_file(graph);
    rvm::Json j;
    try {
        j = rvm::Json::parse(rvm::read_text_file(plan_path));
    } catch (const nlohmann::json::exception &e) {
        throw rvm::ValidationError("'" + plan_path + "' is not valid JSON: " + e.what());
    }
    // Accept either a bare plan or an extraction result carrying one.
    const rvm::Json &plan_json = j.contains("schedule") ? j.at("schedule") : j;
    rvm::VerifyReport report = rvm::verify_schedule_report(f.graph, rvm::plan_from_json(plan_json));
    emit("", dump(rvm::Json{{"verified", report.ok}, {"reason", report.reason}}));
    return report.ok ? 0 : 1;
}

int run_experiment(const std::string &config_path, std::size_t threads) {
    rvm::Json j;
    try {
        j = rvm::Json::parse(rvm::read_text_file(config_path));
    } catch (const nlohmann::json::exception &e) {
        throw rvm::ValidationError("'" + config_path + "' is not valid JSON: " + e.what());
    }
    rvm::ExperimentConfig cfg = rvm::config_from_json(j);
    if (threads > 0) {
        cfg.threads = threads;
    }
    rvm::SweepOutcome outcome = rvm::run_sweep(cfg);
    if (!cfg.include_runtime) {
        for (auto &r : outcome.records) {
            r.runtime_ms = 0.0;
        }
    }
    if (!cfg.records_csv.empty()) {
        std::ostringstream ss;
        rvm::write_records_csv(ss, outcome.records, cfg.include_runtime);
        rvm::write_text_file(cfg.records_csv, ss.str());
    }
    if (!cfg.records_jsonl.empty()) {
        std::ostringstream ss;
        for (const auto &r : outcome.records) {
            ss << rvm::record_to_json(r).dump() << "\n";
        }
        rvm::write_text_file(cfg.records_jsonl, ss.str());
    }
    const bool any_ok = outcome.failed_instances < outcome.total_instances;
    if (any_ok && (!cfg.summary_csv.empty() || !cfg.peaks_csv.empty())) {
        auto rows = rvm::aggregate(outcome.records);
        if (!cfg.summary_csv.empty()) {
            std::ostringstream ss;
            rvm::write_summary_csv(ss, rows);
            rvm::write_text_file(cfg.summary_csv, ss.str());
        }
        if (!cfg.peaks_csv.empty()) {
            std::ostringstream ss;
            rvm::write_peaks_csv(ss, rvm::peak_over_density(rows));
            rvm::write_text_file(cfg.peaks_csv, ss.str());
        }
    }
    std::cerr << outcome.records.size() << " records, " << outcome.failed_instances << "/" << outcome.total_instances
              << " instances failed\n";
    if (outcome.failed()) {
        return kExitPartial;
    }
    return 0;
}

int run_aggregate(const std::string &records_path, const std::string &out, const std::string &peaks) {
    std::istringstream in(rvm::read_text_file(records_path));
    std::vector<rvm::ExperimentRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        try {
            records.push_back(rvm::record_from_json(rvm::Json::parse(line)));
        } catch (const nlohmann::json::exception &e) {
            throw rvm::ValidationError("bad record line " + std::to_string(records.size() + 1) + " in '" +
                                       records_path + "' (expected JSON Lines as written by records_jsonl): " +
                                       e.what());
        }
    }
    auto rows = rvm::aggregate(records);
    std::ostringstream ss;
    rvm::write_summary_csv(ss, rows);
    emit(out, ss.str());
    if (!peaks.empty()) {
        std::ostringstream ps;
        rvm::write_peaks_csv(ps, rvm::peak_over_density(rows));
        rvm::write_text_file(peaks, ps.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Remote GHZ extraction on two-colorable graph states"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Generate a seeded topology as graph JSON");
    generate->add_option("--family", gen.family, "bipartite | ba | as | ppi | bipartite_net")->capture_default_str();
    generate->add_option("--n1", gen.n1, "First partition size (bipartite)");
    generate->add_option("--n2", gen.n2, "Second partition size (bipartite)");
    generate->add_option("--m", gen.m, "Edge count (bipartite)");
    generate->add_option("--nodes", gen.nodes, "Node count (Internet-like families)")->capture_default_str();
    generate->add_option("--density", gen.density, "Attachment count (ba) or edge count (as, ppi, bipartite_net)")
        ->capture_default_str();
    generate->add_option("--subgraph", gen.subgraph, "Emit a connected induced bipartite subgraph of this size");
    generate->add_option("--offset", gen.offset, "as: attachment offset")->capture_default_str();
    generate->add_option("--retain", gen.retain, "ppi: edge retention probability")->capture_default_str();
    generate->add_option("--seed", gen.seed)->capture_default_str();
    generate->add_option("--out", gen.out, "Output path (default stdout)");

    ExtractArgs ext;
    auto *extract = app.add_subcommand("extract", "Run the remote extraction heuristic");
    extract->add_option("--graph", ext.graph, "Graph JSON or edge list")->required();
    extract->add_option("--n", ext.n, "GHZ mass")->capture_default_str();
    extract->add_option("--seed", ext.seed)->capture_default_str();
    extract->add_flag("--both-partitions", ext.both, "Also operate on the second partition, keep the larger volume");
    extract->add_option("--restarts", ext.restarts, "Best of R seeds")->capture_default_str();
    extract->add_option("--out", ext.out, "Output path (default stdout)");

    std::string bounds_graph;
    std::size_t bounds_n = 0;
    auto *bounds = app.add_subcommand("bounds", "Maximum-mass bounds (max degree, independence number)");
    bounds->add_option("--graph", bounds_graph)->required();
    bounds->add_option("--n", bounds_n, "Also report floor(N/n)");

    auto *oracle = app.add_subcommand("oracle", "Exact checks at desk scale");
    oracle->require_subcommand(1);
    std::string exact_graph;
    std::size_t exact_n = 2;
    int exact_side = 1;
    auto *exact = oracle->add_subcommand("exact", "Exhaustive condition maxima");
    exact->add_option("--graph", exact_graph)->required();
    exact->add_option("--n", exact_n)->capture_default_str();
    exact->add_option("--side", exact_side, "Operating partition, 1 or 2")->check(CLI::IsMember({1, 2}));
    std::string verify_graph;
    std::string verify_plan;
    auto *verify = oracle->add_subcommand("verify", "Replay a schedule on the stabilizer tableau");
    verify->add_option("--graph", verify_graph)->required();
    verify->add_option("--plan", verify_plan, "Plan JSON or extraction result")->required();

    auto *experiment = app.add_subcommand("experiment", "Sweeps and aggregation");
    experiment->require_subcommand(1);
    std::string config_path;
    std::size_t threads = 0;
    auto *run = experiment->add_subcommand("run", "Run a sweep from a config file");
    run->add_option("--config", config_path, "Experiment config JSON")->required();
    run->add_option("--threads", threads, "Worker threads (capped by REMOTE_VM_THREADS)");
    std::string records_path;
    std::string summary_out;
    std::string peaks_out;
    auto *agg = experiment->add_subcommand("aggregate", "Summarize JSON-lines records");
    agg->add_option("--records", records_path, "Records as JSON Lines")->required();
    agg->add_option("--out", summary_out, "Summary CSV path (default stdout)");
    agg->add_option("--peaks", peaks_out, "Also write the per-topology peak over density");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (generate->parsed()) {
            return run_generate(gen);
        }
        if (extract->parsed()) {
            return run_extract(ext);
        }
        if (bounds->parsed()) {
            return run_bounds(bounds_graph, bounds_n);
        }
        if (exact->parsed()) {
            return run_oracle_exact(exact_graph, exact_n, exact_side);
        }
        if (verify->parsed()) {
            return run_oracle_verify(verify_graph, verify_plan);
        }
        if (run->parsed()) {
            return run_experiment(config_path, threads);
        }
        if (agg->parsed()) {
            return run_aggregate(records_path, summary_out, peaks_out);
        }
    } catch (const rvm::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
