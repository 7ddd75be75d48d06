// Copyright 2026 The ttnsim Authors
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

#include <string>

#include "json.hpp"
#include "ttn/circuits.hpp"
#include "ttn/graphs.hpp"
#include "ttn/report.hpp"
#include "ttn/state.hpp"
#include "ttn/topology.hpp"

namespace ttn {

using Json = nlohmann::json;

// Complex data is stored as a flat array of interleaved (re, im) pairs.
Json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

Json topology_to_json(const TreeTopology& t);
TreeTopology topology_from_json(const Json& j);

Json state_to_json(const TTNState& s);
TTNState state_from_json(const Json& j);

Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

Json report_to_json(const CompressionReport& r);

/// Plain text: a header line "N M", then one "u v w" line per edge.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace ttn
