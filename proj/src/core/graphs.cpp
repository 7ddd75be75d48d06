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

#include "ttn/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "ttn/circuits.hpp"
#include "ttn/error.hpp"

namespace ttn {

Graph::Graph(int num_vertices) : n_(num_vertices) {
  require(num_vertices >= 0, "graph vertex count must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n_));
}

Graph::Graph(int num_vertices, const std::vector<Edge>& edges) : Graph(num_vertices) {
  for (const auto& e : edges) add_edge(e.u, e.v, e.w);
}

void Graph::add_edge(int u, int v, double w) {
  require(u >= 0 && u < n_ && v >= 0 && v < n_, "edge endpoint out of range");
  require(u != v, "self-loops are not allowed");
  require(std::isfinite(w), "edge weights must be finite");
  require(!has_edge(u, v), "parallel edges are not allowed");
  Edge e{std::min(u, v), std::max(u, v), w};
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e,
                                 [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); }),
                e);
  auto insert_sorted = [](std::vector<int>& xs, int x) { xs.insert(std::upper_bound(xs.begin(), xs.end(), x), x); };
  insert_sorted(adj_[static_cast<std::size_t>(u)], v);
  insert_sorted(adj_[static_cast<std::size_t>(v)], u);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

double Graph::weight(int u, int v) const {
  const int a = std::min(u, v), b = std::max(u, v);
  for (const auto& e : edges_)
    if (e.u == a && e.v == b) return e.w;
  return 0.0;
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::deque<int> q{0};
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        q.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph random_3_regular(int n, std::mt19937_64& rng) {
  require(n >= 4, "random_3_regular needs at least 4 vertices");
  require(n % 2 == 0, "random_3_regular needs an even vertex count (3N/2 edges)");
  std::vector<int> points(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < 3 * n; ++i) points[static_cast<std::size_t>(i)] = i / 3;
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      const int u = points[i], v = points[i + 1];
      if (u == v || g.has_edge(u, v)) {
        ok = false;
        break;
      }
      g.add_edge(u, v);
    }
    if (ok) return g;
  }
}

Graph bridged_3_regular(int n_clusters) {
  require(n_clusters >= 3, "bridged_3_regular needs at least 3 clusters");
  Graph g(4 * n_clusters);
  for (int k = 0; k < n_clusters; ++k) {
    const int a = 4 * k, b = a + 1, c = a + 2, d = a + 3;
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(c, d);
    g.add_edge(d, a);
    g.add_edge(a, c);
  }
  for (int k = 0; k < n_clusters; ++k) g.add_edge(4 * k + 1, 4 * ((k + 1) % n_clusters) + 3);
  return g;
}

Graph treelike_graph(const TreeTopology& t) {
  Graph g(t.num_qubits());
  for (const auto& [a, b] : treelike_pairs(t))
    if (!g.has_edge(a, b)) g.add_edge(a, b);
  return g;
}

double modularity(const Graph& g, const std::vector<std::vector<int>>& blocks) {
  double m = 0.0;
  for (const auto& e : g.edges()) m += e.w;
  if (m == 0.0) return 0.0;
  std::vector<int> block_of(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) block_of.at(static_cast<std::size_t>(v)) = static_cast<int>(b);
  std::vector<double> internal(blocks.size(), 0.0), degree(blocks.size(), 0.0);
  for (const auto& e : g.edges()) {
    const int bu = block_of[static_cast<std::size_t>(e.u)], bv = block_of[static_cast<std::size_t>(e.v)];
    require(bu >= 0 && bv >= 0, "modularity: blocks do not cover the graph");
    if (bu == bv) internal[static_cast<std::size_t>(bu)] += e.w;
    degree[static_cast<std::size_t>(bu)] += e.w;
    degree[static_cast<std::size_t>(bv)] += e.w;
  }
  double q = 0.0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const double a = degree[b] / (2.0 * m);
    q += internal[b] / m - a * a;
  }
  return q;
}

Clustering cluster_graph(const Graph& g) {
  const int n = g.num_vertices();
  require(n >= 1, "cluster_graph needs a nonempty graph");
  double m = 0.0;
  for (const auto& e : g.edges()) m += e.w;

  // Communities keyed by their smallest vertex; between[i][j] = edge weight.
  std::map<int, std::vector<int>> members;
  std::map<int, std::map<int, double>> between;
  std::map<int, double> deg;
  for (int v = 0; v < n; ++v) {
    members[v] = {v};
    deg[v] = 0.0;
  }
  for (const auto& e : g.edges()) {
    between[e.u][e.v] += e.w;
    between[e.v][e.u] += e.w;
    deg[e.u] += e.w;
    deg[e.v] += e.w;
  }

  while (m > 0.0) {
    double best = 0.0;
    int bi = -1, bj = -1;
    for (const auto& [i, row] : between) {
      for (const auto& [j, w] : row) {
        if (j <= i) continue;
        const double gain = w / m - 2.0 * (deg[i] / (2.0 * m)) * (deg[j] / (2.0 * m));
        if (gain > best + 1e-12) {
          best = gain;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) break;
    // merge bj into bi (bi < bj keeps the smallest-vertex key)
    auto& mi = members[bi];
    mi.insert(mi.end(), members[bj].begin(), members[bj].end());
    members.erase(bj);
    deg[bi] += deg[bj];
    deg.erase(bj);
    for (const auto& [k, w] : between[bj]) {
      if (k == bi) continue;
      between[bi][k] += w;
      between[k][bi] += w;
      between[k].erase(bj);
    }
    between[bi].erase(bj);
    between.erase(bj);
  }

  Clustering c;
  for (auto& [key, vs] : members) {
    std::sort(vs.begin(), vs.end());
    c.blocks.push_back(vs);
  }
  c.modularity = modularity(g, c.blocks);
  c.disconnected = !g.connected();
  return c;
}

namespace {

double weight_to(const Graph& g, int v, const std::vector<int>& group) {
  double w = 0.0;
  for (int x : group)
    if (g.has_edge(v, x)) w += g.weight(v, x);
  return w;
}

double weight_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  double w = 0.0;
  for (int v : a) w += weight_to(g, v, b);
  return w;
}

int min_vertex(const std::vector<int>& xs) { return *std::min_element(xs.begin(), xs.end()); }

// Breadth-first order of `block` restricted to its induced subgraph.
std::vector<int> bfs_order(const Graph& g, std::vector<int> block) {
  std::sort(block.begin(), block.end());
  std::vector<int> order;
  std::vector<bool> in_block(static_cast<std::size_t>(g.num_vertices()), false), seen = in_block;
  for (int v : block) in_block[static_cast<std::size_t>(v)] = true;
  for (int start : block) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::deque<int> q{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int w : g.neighbors(v)) {
        if (in_block[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          q.push_back(w);
        }
      }
    }
  }
  return order;
}

}  // namespace

TreeOrdering reorder_for_tree(const Graph& g, const Clustering& c, int leaf_capacity) {
  require(leaf_capacity >= 1, "leaf capacity must be >= 1");
  const int n = g.num_vertices();
  {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& b : c.blocks)
      for (int v : b) {
        require(v >= 0 && v < n, "clustering vertex out of range");
        ++seen[static_cast<std::size_t>(v)];
      }
    for (int s : seen) require(s == 1, "clustering does not partition the graph");
  }
  const auto cap = static_cast<std::size_t>(leaf_capacity);

  // 1. split oversize clusters into connected chunks
  std::vector<std::vector<int>> chunks;
  for (const auto& b : c.blocks) {
    if (b.empty()) continue;
    auto order = bfs_order(g, b);
    for (std::size_t i = 0; i < order.size(); i += cap)
      chunks.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(i),
                          order.begin() + static_cast<std::ptrdiff_t>(std::min(order.size(), i + cap)));
  }

  // 2. pack chunks into full leaves
  std::vector<std::vector<int>> bins;
  auto remaining = [&] {
    return std::any_of(chunks.begin(), chunks.end(), [](const auto& ch) { return !ch.empty(); });
  };
  while (remaining()) {
    std::size_t seed = chunks.size();
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      if (chunks[i].empty()) continue;
      if (seed == chunks.size() || chunks[i].size() > chunks[seed].size() ||
          (chunks[i].size() == chunks[seed].size() && min_vertex(chunks[i]) < min_vertex(chunks[seed])))
        seed = i;
    }
    std::vector<int> bin = std::move(chunks[seed]);
    chunks[seed].clear();
    while (bin.size() < cap && remaining()) {
      std::size_t pick = chunks.size();
      double pick_w = -1.0;
      for (std::size_t i = 0; i < chunks.size(); ++i) {
        if (chunks[i].empty() || bin.size() + chunks[i].size() > cap) continue;
        const double w = weight_between(g, bin, chunks[i]);
        if (pick == chunks.size() || w > pick_w ||
            (w == pick_w && (chunks[i].size() > chunks[pick].size() ||
                             (chunks[i].size() == chunks[pick].size() &&
                              min_vertex(chunks[i]) < min_vertex(chunks[pick]))))) {
          pick = i;
          pick_w = w;
        }
      }
      if (pick < chunks.size()) {
        bin.insert(bin.end(), chunks[pick].begin(), chunks[pick].end());
        chunks[pick].clear();
        continue;
      }
      // nothing fits whole: pull the single best-connected vertex
      int best_v = -1;
      double best_w = -1.0;
      std::size_t from = 0;
      for (std::size_t i = 0; i < chunks.size(); ++i) {
        for (int v : chunks[i]) {
          const double w = weight_to(g, v, bin);
          if (w > best_w || (w == best_w && v < best_v)) {
            best_w = w;
            best_v = v;
            from = i;
          }
        }
      }
      bin.push_back(best_v);
      std::erase(chunks[from], best_v);
    }
    std::sort(bin.begin(), bin.end());
    bins.push_back(std::move(bin));
  }

  // 3. chain the leaves by connection weight
  TreeOrdering out;
  std::vector<bool> placed(bins.size(), false);
  std::size_t current = 0;
  for (std::size_t i = 0; i < bins.size(); ++i)
    if (min_vertex(bins[i]) < min_vertex(bins[current])) current = i;
  for (std::size_t step = 0; step < bins.size(); ++step) {
    placed[current] = true;
    out.leaves.push_back(bins[current]);
    std::size_t next = bins.size();
    double next_w = -1.0;
    for (std::size_t i = 0; i < bins.size(); ++i) {
      if (placed[i]) continue;
      const double w = weight_between(g, bins[current], bins[i]);
      if (next == bins.size() || w > next_w || (w == next_w && min_vertex(bins[i]) < min_vertex(bins[next]))) {
        next = i;
        next_w = w;
      }
    }
    if (next == bins.size()) break;
    current = next;
  }
  for (const auto& leaf : out.leaves) out.permutation.insert(out.permutation.end(), leaf.begin(), leaf.end());
  return out;
}

double maxcut_cost(const Graph& g, const Bitstring& bits) {
  require(bits.size() == static_cast<std::size_t>(g.num_vertices()), "bitstring length does not match vertex count");
  double cut = 0.0;
  for (const auto& e : g.edges())
    if (bits[static_cast<std::size_t>(e.u)] != bits[static_cast<std::size_t>(e.v)]) cut += e.w;
  return cut;
}

}  // namespace ttn
