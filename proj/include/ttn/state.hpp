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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ttn/tensor.hpp"
#include "ttn/topology.hpp"

namespace ttn {

/// Computational basis state, one entry (0 or 1) per qubit.
using Bitstring = std::vector<std::uint8_t>;
/// Row-major 2x2 and 4x4 gate matrices. For a two-qubit gate on (a, b) the
/// row/column index is 2*bit_a + bit_b.
using Matrix2 = std::array<cplx, 4>;
using Matrix4 = std::array<cplx, 16>;

inline constexpr int kDefaultDenseQubitCap = 20;

bool is_unitary(std::span<const cplx> m, std::size_t n, double tol = 1e-10);

/// Tree tensor network state. One tensor per topology node with axes laid
/// out as documented on TreeTopology (bonds first, then physical qubits).
///
/// Dense convention: amplitude index = sum_q bit_q * 2^(N-1-q), i.e. qubit 0
/// is the most significant bit.
class TTNState {
 public:
  TTNState(TopologyPtr topology, std::vector<Tensor> tensors, std::optional<int> center = std::nullopt);

  /// Bond dimension 1 everywhere; norm 1; center at the root.
  static TTNState product_state(TopologyPtr topology, const Bitstring& bits);
  /// Gaussian random tensors with the given bond dimensions, normalized and
  /// canonical at the root.
  static TTNState random(TopologyPtr topology, const BondSpec& bonds, std::mt19937_64& rng);
  /// Exact decomposition of a dense vector by successive SVDs (leaves to
  /// root), truncated to `caps`. Center at the root; norm not renormalized.
  static TTNState from_statevector(TopologyPtr topology, std::span<const cplx> amplitudes, const BondSpec& caps);

  const TreeTopology& topology() const noexcept { return *topology_; }
  const TopologyPtr& topology_ptr() const noexcept { return topology_; }
  int num_qubits() const noexcept { return topology_->num_qubits(); }
  const Tensor& tensor(int v) const { return tensors_.at(static_cast<std::size_t>(v)); }
  const std::vector<Tensor>& tensors() const noexcept { return tensors_; }
  std::optional<int> center() const noexcept { return center_; }
  std::size_t bond_dim(int edge) const;

  /// Replaces one tensor. The center is kept only if `keep_center` is set and
  /// v is the center itself (the caller vouches for the gauge).
  void set_tensor(int v, Tensor t, bool keep_center = false);

  /// Full QR gauge sweep toward `center`. Throws on a zero-norm state.
  void canonicalize(int center);
  /// Moves an existing center along the tree path with one QR per edge;
  /// falls back to canonicalize() when no center is set.
  void move_center(int target);
  /// QR step across the edge between the current center and its neighbor.
  void shift_center(int neighbor);
  void normalize();

  void apply_single_qubit_gate(const Matrix2& u, int qubit);
  /// Exact application of a two-qubit gate whose qubits share a node.
  void apply_local_two_qubit_gate(const Matrix4& u, int q0, int q1);

  /// Largest ||Q^dagger Q - I|| over non-center tensors (0 when no center).
  double isometry_error() const;

 private:
  TopologyPtr topology_;
  std::vector<Tensor> tensors_;
  std::optional<int> center_;
};

TTNState canonicalize(const TTNState& s, int center);
double norm(const TTNState& s);
TTNState apply_single_qubit_gate(const TTNState& s, const Matrix2& u, int qubit);
/// <a|b> for states on identical topologies.
cplx overlap(const TTNState& a, const TTNState& b);
cplx amplitude(const TTNState& s, const Bitstring& bits);
/// Sum over nodes of the product of the tensor's dimensions.
std::uint64_t memory_footprint(const TTNState& s);
std::vector<cplx> to_statevector(const TTNState& s, int max_qubits = kDefaultDenseQubitCap);

/// Node tensor of `s` carrying bond labels (via `bond_label`) and physical
/// labels labels::phys(q, phys_time(q)).
template <class BondLabel, class PhysLabel>
Tensor labeled_node_tensor(const TTNState& s, int v, BondLabel bond_label, PhysLabel phys_label) {
  const auto& topo = s.topology();
  std::vector<Label> ls;
  for (int n : topo.neighbors(v)) ls.push_back(bond_label(topo.node(v).parent == n ? v : n));
  for (int q : topo.node(v).qubits) ls.push_back(phys_label(q));
  Tensor t = s.tensor(v);
  t.set_labels(std::move(ls));
  return t;
}

}  // namespace ttn
