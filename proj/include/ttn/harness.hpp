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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ttn/circuits.hpp"
#include "ttn/compression.hpp"
#include "ttn/graphs.hpp"
#include "ttn/serialization.hpp"

namespace ttn {

struct TreeSpec {
  std::string kind = "layerwise";  // layerwise | path
  std::vector<int> branching;      // layerwise only
  int qubits_per_leaf = 1;
  std::string ordering = "blind";  // blind | naive | explicit
  std::vector<int> permutation;    // explicit only: permutation[slot] = qubit
};

struct ExperimentConfig {
  std::string family;  // brickwall | treelike-random | treelike-inter | qaoa-3reg | qaoa-bridged | qaoa-treelike
  int n = 0;           // 0 means "derive from the tree" for tree-driven families
  int depth = 1;       // D, tree-like depths, or QAOA p
  int n_inter = 0;     // treelike-inter only
  std::vector<std::size_t> chi{16};
  TreeSpec tree;
  std::string method = "dmrg";  // dmrg | svd | both
  int instances = 5;
  std::uint64_t seed = 0;
  int threads = 1;
  int sweeps = 4;
  double threshold = 1e-10;
  int gates_per_step = 1;
  bool layer = false;
  double svd_cutoff = 0.0;
  bool oracle = false;
  bool timing = true;  // false writes 0 in timing columns
  bool save_states = false;
  std::string output = "out";

  static ExperimentConfig from_json(const Json& j);
  Json to_json() const;
  /// Throws ErrorKind::Config with an actionable message.
  void validate() const;
  std::vector<std::string> methods() const;
  bool graph_family() const;
};

/// Per-instance seed: splitmix64(master + instance).
std::uint64_t instance_seed(std::uint64_t master, int instance);

struct Instance {
  int index = 0;
  std::uint64_t seed = 0;
  std::optional<Graph> graph;
  TopologyPtr topology;
  Circuit circuit{1};
};

Instance make_instance(const ExperimentConfig& cfg, int index);
/// Tree topology for a config; `g` drives the naive ordering.
TreeTopology build_topology(const ExperimentConfig& cfg, const Graph* g);

struct ResultRow {
  std::string family;
  int n = 0;
  int depth = 0;
  std::size_t chi = 0;
  std::string method;
  int instance = 0;
  std::uint64_t seed = 0;
  int n2g = 0;
  double fidelity = 1.0;
  double epsilon = 0.0;
  std::uint64_t memory = 0;
  double wall_ms = 0.0;
};

struct TraceRow {
  std::size_t chi = 0;
  std::string method;
  StepRecord step;
};

struct OracleRow {
  int instance = 0;
  std::uint64_t seed = 0;
  std::size_t chi = 0;
  std::string method;
  double exact = 0.0;
};

struct InstanceResult {
  std::vector<ResultRow> rows;
  std::vector<TraceRow> trace;
  std::vector<OracleRow> oracle;
  std::vector<std::pair<std::string, std::string>> artifacts;  // file name -> contents
};

struct ExperimentResult {
  std::vector<InstanceResult> instances;  // by instance index
  std::vector<ResultRow> rows() const;
  std::vector<OracleRow> oracle_rows() const;
};

using ProgressFn = std::function<void(int instance, std::size_t chi, const std::string& method)>;

InstanceResult run_instance(const ExperimentConfig& cfg, int index);
/// Fans instances out over cfg.threads workers; merged by instance index.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress = {});
/// Writes results.csv, ftrace-<i>.csv, oracle.csv (if enabled), config.json
/// and the per-instance artifacts into `dir`.
void write_outputs(const ExperimentConfig& cfg, const ExperimentResult& r, const std::string& dir);

std::string results_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_results_csv(const std::string& text);
std::string ftrace_csv(const std::vector<TraceRow>& rows, bool timing);
std::string oracle_csv(const std::vector<OracleRow>& rows);
std::vector<OracleRow> parse_oracle_csv(const std::string& text);

/// Mean, sample std, min and max of epsilon and F_tilde per
/// (family, N, depth, chi, method). Header only when `rows` is empty.
std::string report_csv(const std::vector<ResultRow>& rows);
/// One row per (instance, chi) with dmrg, svd and exact fidelities side by side.
std::string compare_csv(const std::vector<ResultRow>& rows, const std::vector<OracleRow>& oracle);

std::string format_double(double x);

}  // namespace ttn
