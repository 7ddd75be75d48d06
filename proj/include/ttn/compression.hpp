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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ttn/circuits.hpp"
#include "ttn/report.hpp"
#include "ttn/state.hpp"

namespace ttn {

struct TwoQubitGate {
  Matrix4 u{};
  int q0 = 0;
  int q1 = 1;
  int id = -1;  // position in the originating circuit, -1 when unknown
};

/// Gates applied in list order within one compression step.
using GateBatch = std::vector<TwoQubitGate>;

struct SweepConfig {
  int max_sweeps = 4;
  double threshold = 1e-10;  // stop once a full sweep gains less than this
  BondSpec caps;             // empty means structural maxima
  bool use_cache = true;
};

/// The network <target| U |source> for a fixed batch U. Holds a copy of the
/// target state and, when source and target share a topology and caching is
/// on, one message per directed edge that is recomputed only after a tensor
/// it depends on changes.
class OverlapNetwork {
 public:
  OverlapNetwork(const TTNState& source, const GateBatch& batch, TTNState target, bool use_cache = true);

  const TTNState& target() const noexcept { return target_; }
  TTNState release_target() && { return std::move(target_); }
  bool cached() const noexcept { return cached_; }

  /// Environment of the target tensor at v: the network with that tensor
  /// removed, axes in the order of the target tensor's axes.
  Tensor environment(int v);
  /// Same quantity by contracting the whole network from scratch.
  Tensor environment_uncached(int v) const;
  /// <target| U |source>.
  cplx overlap();

  /// Replaces the tensor at the current center.
  void update_center(Tensor t);
  /// QR gauge step of the target center toward a neighbor.
  void shift_center(int neighbor);

  std::size_t message_computations() const noexcept { return computed_; }

 private:
  struct Piece {
    int node;  // source node the piece acts on
    Tensor t;
  };

  const Tensor& message(int from, int to);
  Tensor bra_tensor(int v) const;
  std::vector<Label> bra_labels(int v) const;
  void invalidate(int changed);

  TopologyPtr source_topo_;
  std::vector<Tensor> ket_;
  std::vector<Piece> pieces_;
  std::vector<Label> final_phys_;  // bra physical label per qubit
  TTNState target_;
  bool cached_ = false;
  std::vector<std::optional<Tensor>> up_;    // c -> parent(c)
  std::vector<std::optional<Tensor>> down_;  // parent(c) -> c
  std::size_t computed_ = 0;
};

struct UpdateResult {
  Tensor tensor;
  double fidelity = 0.0;
};

/// Optimal normalized center tensor F / ||F|| and the fidelity ||F||^2.
UpdateResult update_tensor(const Tensor& environment);

/// Node visit order of one sweep: an Euler tour that starts and ends at the
/// root, so consecutive entries are always adjacent.
std::vector<int> sweep_schedule(const TreeTopology& t);

struct StepResult {
  TTNState state;
  double fidelity = 1.0;
  std::vector<double> trace;  // f after each update
  int sweeps = 0;
  double initial_fidelity = 1.0;
};

/// Variationally compresses U|s> onto the bond caps of the same topology.
StepResult compress_apply(const TTNState& s, const GateBatch& batch, const SweepConfig& cfg = {});

/// Variational compression onto another topology over the same qubits. The
/// target is seeded from a dense decomposition of U|s>, so this path is
/// limited to the dense qubit cap.
StepResult compress_apply(const TTNState& s, const GateBatch& batch, const SweepConfig& cfg, TopologyPtr target);

struct BatchPolicy {
  int gates_per_step = 1;
  bool layer = false;  // group consecutive gates on disjoint qubits
};

std::pair<TTNState, CompressionReport> run_circuit(const TTNState& init, const Circuit& c, const SweepConfig& cfg = {},
                                                   const BatchPolicy& policy = {});

}  // namespace ttn
