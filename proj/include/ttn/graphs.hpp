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

#include <random>
#include <vector>

#include "ttn/state.hpp"
#include "ttn/topology.hpp"

namespace ttn {

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  double w = 1.0;
  bool operator==(const Edge&) const = default;
};

/// Simple undirected weighted graph: no self-loops, no parallel edges,
/// finite weights.
class Graph {
 public:
  explicit Graph(int num_vertices);
  Graph(int num_vertices, const std::vector<Edge>& edges);

  void add_edge(int u, int v, double w = 1.0);
  bool has_edge(int u, int v) const;

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  /// Edges sorted by (u, v).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  double weight(int u, int v) const;
  bool connected() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Uniform simple 3-regular graph by the pairing model with rejection.
Graph random_3_regular(int n, std::mt19937_64& rng);

/// Ring of 4-vertex clusters {a,b,c,d} = {4k..4k+3} wired as the 4-cycle
/// a-b-c-d-a plus chord a-c; bridges b(k) - d(k+1 mod n_clusters).
Graph bridged_3_regular(int n_clusters);

/// Edge set of one depth of the tree-like circuit layout over `t`.
Graph treelike_graph(const TreeTopology& t);

struct Clustering {
  std::vector<std::vector<int>> blocks;  // sorted, ordered by smallest vertex
  double modularity = 0.0;
  bool disconnected = false;
};

double modularity(const Graph& g, const std::vector<std::vector<int>>& blocks);

/// Greedy agglomerative modularity maximization: repeatedly merge the pair
/// of adjacent communities with the largest modularity gain while the gain
/// is positive. Ties go to the pair with the smallest vertex ids.
Clustering cluster_graph(const Graph& g);

struct TreeOrdering {
  /// permutation[slot] = vertex placed at qubit slot `slot`.
  std::vector<int> permutation;
  /// Leaf groups in placement order (concatenation == permutation).
  std::vector<std::vector<int>> leaves;
};

/// Packs clusters into leaves of `leaf_capacity` qubits (splitting large
/// clusters, merging small ones by edge weight) and orders the leaves so
/// that heavily connected groups are adjacent.
TreeOrdering reorder_for_tree(const Graph& g, const Clustering& c, int leaf_capacity = 4);

/// Total weight of edges whose endpoints land in different subsets.
double maxcut_cost(const Graph& g, const Bitstring& bits);

}  // namespace ttn
