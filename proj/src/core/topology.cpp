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

#include "ttn/topology.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ttn/error.hpp"

namespace ttn {

TreeTopology::TreeTopology(int num_qubits, std::vector<TreeNode> nodes)
    : num_qubits_(num_qubits), nodes_(std::move(nodes)) {
  require(num_qubits_ >= 1, "topology needs at least one qubit");
  require(!nodes_.empty(), "topology needs at least one node");
  const int n = num_nodes();
  for (int v = 0; v < n; ++v) {
    const auto& nd = nodes_[static_cast<std::size_t>(v)];
    require(nd.id == v, "node ids must equal their index (0..n-1)");
    if (nd.parent < 0) {
      require(root_ < 0, "topology has more than one root");
      root_ = v;
    } else {
      require(nd.parent < n && nd.parent != v, "node " + std::to_string(v) + " has an invalid parent");
      const auto& pc = nodes_[static_cast<std::size_t>(nd.parent)].children;
      require(std::count(pc.begin(), pc.end(), v) == 1,
              "node " + std::to_string(v) + " is not listed exactly once among its parent's children");
    }
    for (int c : nd.children) {
      require(c >= 0 && c < n && nodes_[static_cast<std::size_t>(c)].parent == v,
              "child " + std::to_string(c) + " of node " + std::to_string(v) + " does not point back");
    }
  }
  require(root_ >= 0, "topology has no root");

  // Reachability from the root; with consistent parent links this proves the
  // graph is a single tree with n-1 edges.
  depth_.assign(static_cast<std::size_t>(n), -1);
  tin_.assign(static_cast<std::size_t>(n), 0);
  tout_.assign(static_cast<std::size_t>(n), 0);
  int clock = 0;
  std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
  depth_[static_cast<std::size_t>(root_)] = 0;
  tin_[static_cast<std::size_t>(root_)] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& ch = nodes_[static_cast<std::size_t>(v)].children;
    if (next < ch.size()) {
      int c = ch[next++];
      require(depth_[static_cast<std::size_t>(c)] < 0, "topology contains a cycle");
      depth_[static_cast<std::size_t>(c)] = depth_[static_cast<std::size_t>(v)] + 1;
      tin_[static_cast<std::size_t>(c)] = clock++;
      stack.emplace_back(c, 0);
    } else {
      tout_[static_cast<std::size_t>(v)] = clock++;
      post_order_.push_back(v);
      stack.pop_back();
    }
  }
  require(static_cast<int>(post_order_.size()) == n, "topology is not connected");

  qubit_node_.assign(static_cast<std::size_t>(num_qubits_), -1);
  qubit_axis_.assign(static_cast<std::size_t>(num_qubits_), 0);
  neighbors_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto& nd = nodes_[static_cast<std::size_t>(v)];
    auto& nb = neighbors_[static_cast<std::size_t>(v)];
    if (nd.parent >= 0) nb.push_back(nd.parent);
    nb.insert(nb.end(), nd.children.begin(), nd.children.end());
    const int deg = static_cast<int>(nb.size());
    const int legs = deg + static_cast<int>(nd.qubits.size());
    require(deg <= kMaxVirtualLegs,
            "leg cap violated: node " + std::to_string(v) + " has " + std::to_string(deg) + " tree edges (max 4)");
    require(legs <= kMaxLegs,
            "leg cap violated: node " + std::to_string(v) + " has " + std::to_string(legs) + " legs (max 5)");
    for (std::size_t i = 0; i < nd.qubits.size(); ++i) {
      int q = nd.qubits[i];
      require(q >= 0 && q < num_qubits_, "qubit " + std::to_string(q) + " out of range");
      require(qubit_node_[static_cast<std::size_t>(q)] < 0, "qubit " + std::to_string(q) + " assigned twice");
      qubit_node_[static_cast<std::size_t>(q)] = v;
      qubit_axis_[static_cast<std::size_t>(q)] = static_cast<std::size_t>(deg) + i;
    }
  }
  for (int q = 0; q < num_qubits_; ++q)
    require(qubit_node_[static_cast<std::size_t>(q)] >= 0, "qubit " + std::to_string(q) + " is not assigned");

  subtree_qubits_.resize(static_cast<std::size_t>(n));
  for (int v : post_order_) {
    auto& sq = subtree_qubits_[static_cast<std::size_t>(v)];
    const auto& nd = nodes_[static_cast<std::size_t>(v)];
    sq = nd.qubits;
    for (int c : nd.children) {
      const auto& cq = subtree_qubits_[static_cast<std::size_t>(c)];
      sq.insert(sq.end(), cq.begin(), cq.end());
    }
    std::sort(sq.begin(), sq.end());
  }
}

std::size_t TreeTopology::bond_axis(int v, int n) const {
  const auto& nb = neighbors(v);
  auto it = std::find(nb.begin(), nb.end(), n);
  require(it != nb.end(), "nodes " + std::to_string(v) + " and " + std::to_string(n) + " are not adjacent");
  return static_cast<std::size_t>(it - nb.begin());
}

std::size_t TreeTopology::qubit_axis(int q) const {
  require(q >= 0 && q < num_qubits_, "qubit index out of range");
  return qubit_axis_[static_cast<std::size_t>(q)];
}

int TreeTopology::node_of_qubit(int q) const {
  require(q >= 0 && q < num_qubits_, "qubit index out of range");
  return qubit_node_[static_cast<std::size_t>(q)];
}

std::vector<int> TreeTopology::edges() const {
  std::vector<int> e;
  for (int v = 0; v < num_nodes(); ++v)
    if (v != root_) e.push_back(v);
  return e;
}

bool TreeTopology::is_edge(int child) const { return child >= 0 && child < num_nodes() && child != root_; }

bool TreeTopology::in_subtree(int u, int v) const {
  const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
  return tin_.at(sv) <= tin_.at(su) && tout_.at(su) <= tout_.at(sv);
}

std::vector<int> TreeTopology::path(int a, int b) const {
  require(a >= 0 && a < num_nodes() && b >= 0 && b < num_nodes(), "path: node out of range");
  std::vector<int> up_a{a}, up_b{b};
  int x = a, y = b;
  while (depth(x) > depth(y)) up_a.push_back(x = node(x).parent);
  while (depth(y) > depth(x)) up_b.push_back(y = node(y).parent);
  while (x != y) {
    up_a.push_back(x = node(x).parent);
    up_b.push_back(y = node(y).parent);
  }
  up_b.pop_back();  // common ancestor already in up_a
  up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
  return up_a;
}

bool TreeTopology::operator==(const TreeTopology& other) const {
  if (num_qubits_ != other.num_qubits_ || nodes_.size() != other.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto &a = nodes_[i], &b = other.nodes_[i];
    if (a.parent != b.parent || a.children != b.children || a.qubits != b.qubits) return false;
  }
  return true;
}

namespace {

// Builds the internal skeleton for `branching` and returns the node list with
// leaves (last layer) left without qubits, plus the leaf ids in order.
std::vector<TreeNode> skeleton(std::span<const int> branching, std::vector<int>& leaves) {
  std::vector<TreeNode> nodes(1);
  nodes[0].id = 0;
  std::vector<int> layer{0};
  for (int b : branching) {
    require(b >= 1, "branching entries must be >= 1");
    require(b <= kMaxVirtualLegs, "leg cap violated: branching " + std::to_string(b) + " exceeds 4 children");
    std::vector<int> next;
    for (int parent : layer) {
      for (int k = 0; k < b; ++k) {
        TreeNode nd;
        nd.id = static_cast<int>(nodes.size());
        nd.parent = parent;
        nodes[static_cast<std::size_t>(parent)].children.push_back(nd.id);
        next.push_back(nd.id);
        nodes.push_back(std::move(nd));
      }
    }
    layer = std::move(next);
  }
  leaves = std::move(layer);
  return nodes;
}

}  // namespace

TreeTopology build_layerwise_regular(int num_qubits, std::span<const int> branching, int qubits_per_leaf) {
  require(num_qubits >= 1, "num_qubits must be >= 1");
  require(qubits_per_leaf >= 1, "qubits_per_leaf must be >= 1");
  long long leaves_count = 1;
  for (int b : branching) leaves_count *= std::max(b, 1);
  require(leaves_count * qubits_per_leaf == num_qubits,
          "qubits_per_leaf x product(branching) must equal the qubit count");
  std::vector<int> leaves;
  auto nodes = skeleton(branching, leaves);
  int q = 0;
  for (int leaf : leaves)
    for (int k = 0; k < qubits_per_leaf; ++k) nodes[static_cast<std::size_t>(leaf)].qubits.push_back(q++);
  return TreeTopology(num_qubits, std::move(nodes));
}

TreeTopology build_path_topology(int num_qubits, int qubits_per_node) {
  require(num_qubits >= 1, "num_qubits must be >= 1");
  require(qubits_per_node >= 1 && num_qubits % qubits_per_node == 0,
          "qubits_per_node must divide the qubit count");
  const int n = num_qubits / qubits_per_node;
  std::vector<TreeNode> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& nd = nodes[static_cast<std::size_t>(i)];
    nd.id = i;
    nd.parent = i - 1;
    if (i + 1 < n) nd.children.push_back(i + 1);
    for (int k = 0; k < qubits_per_node; ++k) nd.qubits.push_back(i * qubits_per_node + k);
  }
  return TreeTopology(num_qubits, std::move(nodes));
}

TreeTopology build_from_clusters(int num_qubits, const std::vector<std::vector<int>>& clusters,
                                 std::span<const int> branching) {
  require(num_qubits >= 1, "num_qubits must be >= 1");
  std::vector<int> seen(static_cast<std::size_t>(num_qubits), 0);
  for (const auto& c : clusters) {
    require(!c.empty(), "clusters must be nonempty");
    for (int q : c) {
      require(q >= 0 && q < num_qubits, "cluster qubit out of range");
      require(seen[static_cast<std::size_t>(q)]++ == 0, "clusters are not a partition (qubit repeated)");
    }
  }
  for (int s : seen) require(s == 1, "clusters do not cover every qubit");
  std::vector<int> leaves;
  auto nodes = skeleton(branching, leaves);
  require(leaves.size() == clusters.size(), "product(branching) must equal the number of clusters");
  for (std::size_t i = 0; i < leaves.size(); ++i) nodes[static_cast<std::size_t>(leaves[i])].qubits = clusters[i];
  return TreeTopology(num_qubits, std::move(nodes));
}

std::uint64_t structural_max_bond(const TreeTopology& t, int edge) {
  require(t.is_edge(edge), "structural_max_bond: unknown edge " + std::to_string(edge));
  const int below = static_cast<int>(t.subtree_qubits(edge).size());
  const int side = std::min(below, t.num_qubits() - below);
  return side >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << side);
}

BondSpec BondSpec::uniform(const TreeTopology& t, std::size_t chi) {
  require(chi >= 1, "bond dimension must be >= 1");
  BondSpec spec;
  spec.caps_.assign(static_cast<std::size_t>(t.num_nodes()), 0);
  for (int e : t.edges())
    spec.caps_[static_cast<std::size_t>(e)] =
        static_cast<std::size_t>(std::min<std::uint64_t>(chi, structural_max_bond(t, e)));
  return spec;
}

BondSpec BondSpec::structural(const TreeTopology& t) {
  return uniform(t, static_cast<std::size_t>(std::uint64_t{1} << 62));
}

BondSpec::BondSpec(const TreeTopology& t, std::vector<std::size_t> caps) : caps_(std::move(caps)) {
  require(caps_.size() == static_cast<std::size_t>(t.num_nodes()), "bond spec must have one entry per node");
  for (int e : t.edges()) {
    const auto c = caps_[static_cast<std::size_t>(e)];
    require(c >= 1, "bond cap below 1 on edge " + std::to_string(e));
    require(c <= structural_max_bond(t, e), "bond cap exceeds structural maximum on edge " + std::to_string(e));
  }
  caps_[static_cast<std::size_t>(t.root())] = 0;
}

}  // namespace ttn
