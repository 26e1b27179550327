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
#include <string>
#include <vector>

#include <json.hpp>

#include "rvm/conditions.h"
#include "rvm/extraction.h"
#include "rvm/harness.h"
#include "rvm/oracle.h"

namespace rvm {

using Json = nlohmann::ordered_json;

/// A graph file: {"num_vertices": N, "edges": [[u, v], ...],
/// "partition": [1|2, ...] (optional), "vertices": [...] (optional, when some
/// ids are dead)}.
struct GraphFile {
    Graph graph;
    std::optional<std::vector<std::uint8_t>> partition;
};

Json graph_to_json(const Graph &g, const Bipartition *b = nullptr);
GraphFile graph_from_json(const Json &j);

/// Whitespace-separated "u v" lines; '#' starts a comment.
GraphFile graph_from_edge_list(const std::string &text);

/// Dispatches on extension: .json, otherwise edge list.
GraphFile read_graph_file(const std::string &path);

/// Labels from the file, or a BFS 2-coloring when absent.
Bipartition bipartition_for(const GraphFile &f);

Json plan_to_json(const MeasurementPlan &plan);
MeasurementPlan plan_from_json(const Json &j);

Json extraction_to_json(const ExtractionResult &r);
Json oracle_to_json(const OracleReport &r);
Json bounds_to_json(const BoundsReport &r);

Json record_to_json(const ExperimentRecord &r);
ExperimentRecord record_from_json(const Json &j);

Json config_to_json(const ExperimentConfig &cfg);
ExperimentConfig config_from_json(const Json &j);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

}  // namespace rvm
