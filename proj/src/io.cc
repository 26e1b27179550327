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

#include "rvm/io.h"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace rvm {

namespace {

template <typename T>
T field(const Json &j, const char *key) {
    if (!j.contains(key)) {
        throw ValidationError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("field '") + key + "': " + e.what());
    }
}

template <typename T>
T field_or(const Json &j, const char *key, T fallback) {
    return j.contains(key) ? field<T>(j, key) : fallback;
}

Json vertices_json(const std::vector<Vertex> &vs) {
    Json a = Json::array();
    for (Vertex v : vs) {
        a.push_back(v);
    }
    return a;
}

Json ops_json(const OpCounts &o) {
    return Json{{"step1", o.step1},
                {"step2_initial", o.step2_initial},
                {"expand", o.expand},
                {"refine", o.refine},
                {"total", o.total()}};
}

OpCounts ops_from_json(const Json &j) {
    OpCounts o;
    o.step1 = field<std::uint64_t>(j, "step1");
    o.step2_initial = field<std::uint64_t>(j, "step2_initial");
    o.expand = field<std::uint64_t>(j, "expand");
    o.refine = field<std::uint64_t>(j, "refine");
    return o;
}

Json components_json(const std::vector<StarComponent> &cs) {
    Json a = Json::array();
    for (const auto &c : cs) {
        a.push_back(Json{{"center", c.center}, {"leaves", vertices_json(c.leaves)}});
    }
    return a;
}

}  // namespace

Json graph_to_json(const Graph &g, const Bipartition *b) {
    Json j;
    j["num_vertices"] = g.universe();
    if (g.num_vertices() != g.universe()) {
        j["vertices"] = vertices_json(g.vertices().to_vector());
    }
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back(Json::array({u, v}));
    }
    j["edges"] = std::move(edges);
    if (b != nullptr) {
        j["partition"] = b->part_of;
    }
    return j;
}

GraphFile graph_from_json(const Json &j) {
    const auto n = field<std::size_t>(j, "num_vertices");
    std::vector<Edge> edges;
    for (const auto &e : field<Json>(j, "edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw ValidationError("each edge must be a [u, v] pair");
        }
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    GraphFile f;
    f.graph = Graph::from_edges(n, edges);
    if (j.contains("vertices")) {
        VertexSet keep(n);
        for (Vertex v : field<std::vector<Vertex>>(j, "vertices")) {
            if (v >= n) {
                throw ValidationError("vertex " + std::to_string(v) + " out of range");
            }
            keep.insert(v);
        }
        f.graph.remove_vertices_in_place(f.graph.vertices() - keep);
    }
    if (j.contains("partition")) {
        auto labels = field<std::vector<std::uint8_t>>(j, "partition");
        if (labels.size() != n) {
            throw ValidationError("partition has " + std::to_string(labels.size()) + " labels for " +
                                  std::to_string(n) + " vertices");
        }
        f.partition = std::move(labels);
    }
    return f;
}

GraphFile graph_from_edge_list(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    std::size_t n = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        long long u = 0;
        long long v = 0;
        if (!(ls >> u)) {
            continue;
        }
        std::string rest;
        if (!(ls >> v) || (ls >> rest) || u < 0 || v < 0) {
            throw ValidationError("edge list line " + std::to_string(lineno) + ": expected two vertex ids");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
    }
    return GraphFile{Graph::from_edges(n, edges), std::nullopt};
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

GraphFile read_graph_file(const std::string &path) {
    const std::string text = read_text_file(path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception &e) {
            throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
        }
        return graph_from_json(j);
    }
    return graph_from_edge_list(text);
}

Bipartition bipartition_for(const GraphFile &f) {
    if (f.partition) {
        return refresh_bipartition(f.graph, *f.partition);
    }
    return two_coloring(f.graph);
}

Json plan_to_json(const MeasurementPlan &plan) {
    Json steps = Json::array();
    for (const auto &s : plan.steps) {
        Json step{{"vertex", s.vertex}, {"basis", std::string(1, basis_char(s.basis))}};
        if (s.special_neighbor) {
            step["special_neighbor"] = *s.special_neighbor;
        }
        steps.push_back(std::move(step));
    }
    return Json{{"steps", std::move(steps)},
                {"centers", vertices_json(plan.centers)},
                {"components", components_json(plan.components)}};
}

MeasurementPlan plan_from_json(const Json &j) {
    MeasurementPlan plan;
    for (const auto &s : field<Json>(j, "steps")) {
        MeasurementStep step;
        step.vertex = field<Vertex>(s, "vertex");
        step.basis = parse_basis(field<std::string>(s, "basis"));
        if (s.contains("special_neighbor")) {
            step.special_neighbor = field<Vertex>(s, "special_neighbor");
        }
        plan.steps.push_back(step);
    }
    plan.centers = field_or<std::vector<Vertex>>(j, "centers", {});
    for (const auto &c : field_or<Json>(j, "components", Json::array())) {
        plan.components.push_back(StarComponent{field<Vertex>(c, "center"), field<std::vector<Vertex>>(c, "leaves")});
    }
    return plan;
}

Json extraction_to_json(const ExtractionResult &r) {
    Json trace = Json::array();
    for (const auto &e : r.trace) {
        trace.push_back(Json{{"kind", e.kind}, {"value", e.value}, {"vertices", vertices_json(e.vertices)}});
    }
    return Json{{"n", r.n},
                {"seed", r.seed},
                {"partition", index_of(r.side) + 1},
                {"n_max_lower", r.n_max_lower},
                {"volume", r.volume},
                {"r_tilde", r.r_tilde},
                {"locations", components_json(r.locations)},
                {"schedule", plan_to_json(r.schedule)},
                {"ops", ops_json(r.ops)},
                {"trace", std::move(trace)}};
}

Json oracle_to_json(const OracleReport &r) {
    Json witnesses = Json::array();
    for (const auto &w : r.witness_sets) {
        witnesses.push_back(vertices_json(w.to_vector()));
    }
    return Json{{"max_a", r.max_a},
                {"max_b", r.max_b},
                {"theoretical_lower", r.theoretical_lower},
                {"witness_sets", std::move(witnesses)},
                {"enumerated", r.enumerated}};
}

Json bounds_to_json(const BoundsReport &r) {
    return Json{{"num_vertices", r.num_vertices},
                {"n_max_lower", r.n_max_lower},
                {"n_max_upper", r.n_max_upper},
                {"upper_exact", r.upper_exact}};
}

Json record_to_json(const ExperimentRecord &r) {
    return Json{{"family", r.family},
                {"n1", r.n1},
                {"n2", r.n2},
                {"nodes", r.nodes},
                {"density", r.density},
                {"m", r.m},
                {"sub_m", r.sub_m},
                {"num_vertices", r.num_vertices},
                {"instance", r.instance},
                {"seed", r.seed},
                {"n", r.n},
                {"r_ell", r.r_ell},
                {"r_tilde", r.r_tilde},
                {"n_ell_max", r.n_ell_max},
                {"n_max_lower", r.n_max_lower},
                {"n_max_upper", r.n_max_upper},
                {"upper_volume", r.upper_volume},
                {"runtime_ms", r.runtime_ms},
                {"ops", ops_json(r.ops)},
                {"error", r.error}};
}

ExperimentRecord record_from_json(const Json &j) {
    ExperimentRecord r;
    r.family = field<std::string>(j, "family");
    r.n1 = field<std::size_t>(j, "n1");
    r.n2 = field<std::size_t>(j, "n2");
    r.nodes = field<std::size_t>(j, "nodes");
    r.density = field<std::size_t>(j, "density");
    r.m = field<std::size_t>(j, "m");
    r.sub_m = field<std::size_t>(j, "sub_m");
    r.num_vertices = field<std::size_t>(j, "num_vertices");
    r.instance = field<std::size_t>(j, "instance");
    r.seed = field<std::uint64_t>(j, "seed");
    r.n = field<std::size_t>(j, "n");
    r.r_ell = field<std::size_t>(j, "r_ell");
    r.r_tilde = field<std::size_t>(j, "r_tilde");
    r.n_ell_max = field<std::size_t>(j, "n_ell_max");
    r.n_max_lower = field<std::size_t>(j, "n_max_lower");
    r.n_max_upper = field<std::size_t>(j, "n_max_upper");
    r.upper_volume = field<std::size_t>(j, "upper_volume");
    r.runtime_ms = field<double>(j, "runtime_ms");
    r.ops = ops_from_json(field<Json>(j, "ops"));
    r.error = field<std::string>(j, "error");
    return r;
}

Json config_to_json(const ExperimentConfig &cfg) {
    Json tops = Json::array();
    for (const auto &t : cfg.topologies) {
        Json o{{"family", to_string(t.family)}};
        if (t.family == Family::kRandomBipartite) {
            o["n1"] = t.n1;
            o["n2"] = t.n2;
        } else {
            o["nodes"] = t.nodes;
            o["subgraph"] = t.subgraph;
            o["offset"] = t.offset;
            o["retain"] = t.retain;
        }
        o["densities"] = t.densities;
        tops.push_back(std::move(o));
    }
    return Json{{"name", cfg.name},
                {"topologies", std::move(tops)},
                {"n_values", cfg.n_values},
                {"instances", cfg.instances},
                {"seed_base", cfg.seed_base},
                {"restarts", cfg.restarts},
                {"both_partitions", cfg.both_partitions},
                {"m_points", cfg.m_points},
                {"threads", cfg.threads},
                {"include_runtime", cfg.include_runtime},
                {"outputs",
                 {{"records_csv", cfg.records_csv},
                  {"records_jsonl", cfg.records_jsonl},
                  {"summary_csv", cfg.summary_csv},
                  {"peaks_csv", cfg.peaks_csv}}}};
}

ExperimentConfig config_from_json(const Json &j) {
    ExperimentConfig cfg;
    cfg.name = field_or<std::string>(j, "name", cfg.name);
    for (const auto &o : field<Json>(j, "topologies")) {
        TopologySweep t;
        t.family = parse_family(field<std::string>(o, "family"));
        t.n1 = field_or<std::size_t>(o, "n1", 0);
        t.n2 = field_or<std::size_t>(o, "n2", 0);
        t.nodes = field_or<std::size_t>(o, "nodes", t.nodes);
        t.subgraph = field_or<std::size_t>(o, "subgraph", t.subgraph);
        t.offset = field_or<double>(o, "offset", t.offset);
        t.retain = field_or<double>(o, "retain", t.retain);
        t.densities = field_or<std::vector<std::size_t>>(o, "densities", {});
        cfg.topologies.push_back(std::move(t));
    }
    cfg.n_values = field_or<std::vector<std::size_t>>(j, "n_values", cfg.n_values);
    cfg.instances = field_or<std::size_t>(j, "instances", cfg.instances);
    cfg.seed_base = field_or<std::uint64_t>(j, "seed_base", cfg.seed_base);
    cfg.restarts = field_or<std::size_t>(j, "restarts", cfg.restarts);
    cfg.both_partitions = field_or<bool>(j, "both_partitions", cfg.both_partitions);
    cfg.m_points = field_or<std::size_t>(j, "m_points", cfg.m_points);
    cfg.threads = field_or<std::size_t>(j, "threads", cfg.threads);
    cfg.include_runtime = field_or<bool>(j, "include_runtime", cfg.include_runtime);
    if (j.contains("outputs")) {
        const Json &out = j.at("outputs");
        cfg.records_csv = field_or<std::string>(out, "records_csv", "");
        cfg.records_jsonl = field_or<std::string>(out, "records_jsonl", "");
        cfg.summary_csv = field_or<std::string>(out, "summary_csv", "");
        cfg.peaks_csv = field_or<std::string>(out, "peaks_csv", "");
    }
    validate(cfg);
    return cfg;
}

}  // namespace rvm
