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
#include <memory>
#include <span>
#include <vector>

namespace ttn {

/// Per-node leg limits of the ansatz: at most four tree edges, at most five
/// legs in total (tree edges plus physical qubits).
inline constexpr int kMaxVirtualLegs = 4;
inline constexpr int kMaxLegs = 5;

struct TreeNode {
  int id = 0;
  int parent = -1;  // -1 for the root
  std::vector<int> children;
  std::vector<int> qubits;
};

/// Immutable tree shape. Node ids are 0..n-1 and the root is the unique node
/// with parent -1. An edge is identified by its child node id.
///
/// Tensor axis convention (used by every state on this topology): for node v
/// the axes are its neighbors in `neighbors(v)` order (parent first, then
/// children in order), followed by one axis per qubit in `node(v).qubits`
/// order.
class TreeTopology {
 public:
  /// Validates connectivity, acyclicity, qubit coverage and leg caps.
  TreeTopology(int num_qubits, std::vector<TreeNode> nodes);

  int num_qubits() const noexcept { return num_qubits_; }
  int num_nodes() const noexcept { return static_cast<int>(nodes_.size()); }
  int root() const noexcept { return root_; }
  const TreeNode& node(int v) const { return nodes_.at(static_cast<std::size_t>(v)); }
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }

  const std::vector<int>& neighbors(int v) const { return neighbors_.at(static_cast<std::size_t>(v)); }
  /// Axis index of the bond to neighbor `n` in node v's tensor.
  std::size_t bond_axis(int v, int n) const;
  /// Axis index of qubit q in its node's tensor.
  std::size_t qubit_axis(int q) const;
  int node_of_qubit(int q) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  /// Non-root node ids, i.e. all edges.
  std::vector<int> edges() const;
  bool is_edge(int child) const;
  /// Node sequence from a to b inclusive.
  std::vector<int> path(int a, int b) const;
  /// Qubits in the subtree rooted at v (ascending).
  const std::vector<int>& subtree_qubits(int v) const { return subtree_qubits_.at(static_cast<std::size_t>(v)); }
  /// True when u lies in the subtree rooted at v.
  bool in_subtree(int u, int v) const;
  /// Post-order (children before parents) over the whole tree.
  const std::vector<int>& post_order() const noexcept { return post_order_; }
  int depth(int v) const { return depth_.at(static_cast<std::size_t>(v)); }

  bool operator==(const TreeTopology& other) const;

 private:
  int num_qubits_;
  int root_ = -1;
  std::vector<TreeNode> nodes_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> qubit_node_;
  std::vector<std::size_t> qubit_axis_;
  std::vector<std::vector<int>> subtree_qubits_;
  std::vector<int> post_order_;
  std::vector<int> depth_;
  std::vector<int> tin_, tout_;
};

using TopologyPtr = std::shared_ptr<const TreeTopology>;

/// Every non-leaf node on layer l has branching[l] children; leaves hold
/// `qubits_per_leaf` consecutive qubits in ascending order. Node ids are in
/// breadth-first order.
TreeTopology build_layerwise_regular(int num_qubits, std::span<const int> branching, int qubits_per_leaf);

/// Path-shaped tree (an MPS): node i is linked to node i+1 and holds qubits
/// [i*k, (i+1)*k).
TreeTopology build_path_topology(int num_qubits, int qubits_per_node = 1);

/// One leaf per cluster (in the given order), grouped bottom-up by
/// `branching` exactly like build_layerwise_regular.
TreeTopology build_from_clusters(int num_qubits, const std::vector<std::vector<int>>& clusters,
                                 std::span<const int> branching);

/// min(2^{qubits below the edge}, 2^{qubits above}), saturating at 2^63.
std::uint64_t structural_max_bond(const TreeTopology& t, int edge);

/// Per-edge bond caps indexed by child node id (root entry unused).
class BondSpec {
 public:
  BondSpec() = default;
  /// chi on every edge, clipped to each edge's structural maximum.
  static BondSpec uniform(const TreeTopology& t, std::size_t chi);
  /// Every edge at its structural maximum.
  static BondSpec structural(const TreeTopology& t);
  /// Explicit caps; each must satisfy 1 <= cap <= structural max.
  BondSpec(const TreeTopology& t, std::vector<std::size_t> caps);

  std::size_t cap(int edge) const { return caps_.at(static_cast<std::size_t>(edge)); }
  const std::vector<std::size_t>& caps() const noexcept { return caps_; }
  bool empty() const noexcept { return caps_.empty(); }

 private:
  std::vector<std::size_t> caps_;
};

}  // namespace ttn
