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

#include "ttn/state.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "axis_ops.hpp"
#include "labels.hpp"
#include "ttn/error.hpp"

namespace ttn {
namespace {

using detail::absorb_matrix;
using detail::last_axis_to;

constexpr double kZeroNorm = 1e-200;

std::vector<int> order_away_from(const TreeTopology& topo, int start, std::vector<int>& toward) {
  // BFS from start; toward[v] = neighbor of v on the path to start.
  std::vector<int> order;
  toward.assign(static_cast<std::size_t>(topo.num_nodes()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(topo.num_nodes()), false);
  std::deque<int> queue{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int n : topo.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(n)]) {
        seen[static_cast<std::size_t>(n)] = true;
        toward[static_cast<std::size_t>(n)] = v;
        queue.push_back(n);
      }
    }
  }
  return order;
}

Label edge_of(const TreeTopology& topo, int v, int n) { return topo.node(v).parent == n ? v : n; }

}  // namespace

bool is_unitary(std::span<const cplx> m, std::size_t n, double tol) {
  if (m.size() != n * n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) s += std::conj(m[k * n + i]) * m[k * n + j];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

TTNState::TTNState(TopologyPtr topology, std::vector<Tensor> tensors, std::optional<int> center)
    : topology_(std::move(topology)), tensors_(std::move(tensors)), center_(center) {
  require(topology_ != nullptr, "state needs a topology");
  const auto& topo = *topology_;
  require(tensors_.size() == static_cast<std::size_t>(topo.num_nodes()), "state needs one tensor per node");
  for (int v = 0; v < topo.num_nodes(); ++v) {
    const Tensor& t = tensors_[static_cast<std::size_t>(v)];
    const auto deg = static_cast<std::size_t>(topo.degree(v));
    require(t.rank() == deg + topo.node(v).qubits.size(),
            "tensor of node " + std::to_string(v) + " has the wrong number of axes");
    for (std::size_t a = deg; a < t.rank(); ++a)
      require(t.dim(a) == 2, "physical axes must have dimension 2 (node " + std::to_string(v) + ")");
  }
  for (int e : topo.edges()) {
    const int p = topo.node(e).parent;
    require(tensors_[static_cast<std::size_t>(e)].dim(topo.bond_axis(e, p)) ==
                tensors_[static_cast<std::size_t>(p)].dim(topo.bond_axis(p, e)),
            "bond dimension mismatch on edge " + std::to_string(e));
  }
  if (center_) require(*center_ >= 0 && *center_ < topo.num_nodes(), "center out of range");
  for (auto& t : tensors_) t.clear_labels();
}

TTNState TTNState::product_state(TopologyPtr topology, const Bitstring& bits) {
  require(topology != nullptr, "state needs a topology");
  const auto& topo = *topology;
  require(bits.size() == static_cast<std::size_t>(topo.num_qubits()), "bitstring length does not match qubit count");
  std::vector<Tensor> tensors;
  for (int v = 0; v < topo.num_nodes(); ++v) {
    std::vector<std::size_t> shape(static_cast<std::size_t>(topo.degree(v)), 1);
    std::size_t flat = 0;
    for (int q : topo.node(v).qubits) {
      require(bits[static_cast<std::size_t>(q)] <= 1, "bits must be 0 or 1");
      shape.push_back(2);
      flat = flat * 2 + bits[static_cast<std::size_t>(q)];
    }
    Tensor t(shape);
    t[flat] = 1.0;
    tensors.push_back(std::move(t));
  }
  return TTNState(std::move(topology), std::move(tensors), topo.root());
}

TTNState TTNState::random(TopologyPtr topology, const BondSpec& bonds, std::mt19937_64& rng) {
  require(topology != nullptr, "state needs a topology");
  const auto& topo = *topology;
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Tensor> tensors;
  for (int v = 0; v < topo.num_nodes(); ++v) {
    std::vector<std::size_t> shape;
    for (int n : topo.neighbors(v)) shape.push_back(bonds.cap(static_cast<int>(edge_of(topo, v, n))));
    for (std::size_t k = 0; k < topo.node(v).qubits.size(); ++k) shape.push_back(2);
    Tensor t(shape);
    for (auto& x : t.data()) {
      const double re = normal(rng);
      const double im = normal(rng);
      x = cplx{re, im};
    }
    tensors.push_back(std::move(t));
  }
  TTNState s(std::move(topology), std::move(tensors));
  s.canonicalize(topo.root());
  s.normalize();
  return s;
}

TTNState TTNState::from_statevector(TopologyPtr topology, std::span<const cplx> amplitudes, const BondSpec& caps) {
  require(topology != nullptr, "state needs a topology");
  const auto& topo = *topology;
  const int n = topo.num_qubits();
  require(n <= 30 && amplitudes.size() == (std::size_t{1} << n), "amplitude vector has the wrong length");

  std::vector<std::size_t> shape(static_cast<std::size_t>(n), 2);
  std::vector<Label> ls;
  for (int q = 0; q < n; ++q) ls.push_back(labels::phys(q));
  Tensor rest(shape, std::vector<cplx>(amplitudes.begin(), amplitudes.end()));
  rest.set_labels(ls);

  std::vector<Tensor> tensors(static_cast<std::size_t>(topo.num_nodes()));
  auto node_labels = [&](int v) {
    std::vector<Label> out;
    for (int nb : topo.neighbors(v)) out.push_back(labels::ket_bond(static_cast<int>(edge_of(topo, v, nb))));
    for (int q : topo.node(v).qubits) out.push_back(labels::phys(q));
    return out;
  };
  for (int v : topo.post_order()) {
    const auto target = node_labels(v);
    if (v == topo.root()) {
      std::vector<std::size_t> perm;
      for (Label l : target) perm.push_back(rest.axis_of(l));
      Tensor t = rest.permuted(perm);
      t.clear_labels();
      tensors[static_cast<std::size_t>(v)] = std::move(t);
      break;
    }
    std::vector<std::size_t> left;
    std::vector<Label> left_labels;
    for (Label l : target) {
      if (l == labels::ket_bond(v)) continue;
      left.push_back(rest.axis_of(l));
      left_labels.push_back(l);
    }
    SvdResult svd = svd_split(rest, left, caps.cap(v), 0.0);
    std::vector<Label> rest_labels{labels::ket_bond(v)};
    for (auto a : complement_axes(rest.rank(), left)) rest_labels.push_back(rest.labels()[a]);

    left_labels.push_back(labels::ket_bond(v));
    svd.u.set_labels(left_labels);
    std::vector<std::size_t> perm;
    for (Label l : target) perm.push_back(svd.u.axis_of(l));
    Tensor t = svd.u.permuted(perm);
    t.clear_labels();
    tensors[static_cast<std::size_t>(v)] = std::move(t);

    Tensor sv = std::move(svd.vh);
    const std::size_t cols = sv.size() / svd.s.size();
    for (std::size_t i = 0; i < svd.s.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) sv[i * cols + j] *= svd.s[i];
    sv.set_labels(rest_labels);
    rest = std::move(sv);
  }
  return TTNState(std::move(topology), std::move(tensors), topo.root());
}

std::size_t TTNState::bond_dim(int edge) const {
  require(topology_->is_edge(edge), "unknown edge " + std::to_string(edge));
  return tensor(edge).dim(0);  // a non-root node's first axis is its parent bond
}

void TTNState::set_tensor(int v, Tensor t, bool keep_center) {
  require(v >= 0 && v < topology_->num_nodes(), "node out of range");
  t.clear_labels();
  tensors_[static_cast<std::size_t>(v)] = std::move(t);
  if (!(keep_center && center_ && *center_ == v)) center_.reset();
}

void TTNState::shift_center(int neighbor) {
  require(center_.has_value(), "shift_center needs a center");
  const auto& topo = *topology_;
  const int u = *center_;
  const std::size_t k = topo.bond_axis(u, neighbor);
  Tensor& tu = tensors_[static_cast<std::size_t>(u)];
  std::vector<std::size_t> left = complement_axes(tu.rank(), std::span(&k, 1));
  QrResult qr = qr_split(tu, left);
  tu = last_axis_to(qr.q, k);
  Tensor& tw = tensors_[static_cast<std::size_t>(neighbor)];
  tw = absorb_matrix(qr.r, tw, topo.bond_axis(neighbor, u));
  center_ = neighbor;
}

void TTNState::canonicalize(int center) {
  const auto& topo = *topology_;
  require(center >= 0 && center < topo.num_nodes(), "canonicalize: unknown node " + std::to_string(center));
  std::vector<int> toward;
  auto order = order_away_from(topo, center, toward);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int u = *it;
    if (u == center) continue;
    center_ = u;
    shift_center(toward[static_cast<std::size_t>(u)]);
  }
  center_ = center;
  if (!(tensors_[static_cast<std::size_t>(center)].norm() > kZeroNorm))
    fail(ErrorKind::Numerical, "canonicalize: state has zero norm");
}

void TTNState::move_center(int target) {
  const auto& topo = *topology_;
  require(target >= 0 && target < topo.num_nodes(), "move_center: unknown node " + std::to_string(target));
  if (!center_) {
    canonicalize(target);
    return;
  }
  const auto p = topo.path(*center_, target);
  for (std::size_t i = 1; i < p.size(); ++i) shift_center(p[i]);
}

void TTNState::normalize() {
  if (!center_) canonicalize(topology_->root());
  Tensor& c = tensors_[static_cast<std::size_t>(*center_)];
  const double n = c.norm();
  if (!(n > kZeroNorm)) fail(ErrorKind::Numerical, "normalize: state has zero norm");
  c *= 1.0 / n;
}

void TTNState::apply_single_qubit_gate(const Matrix2& u, int qubit) {
  require(qubit >= 0 && qubit < num_qubits(), "qubit index out of range");
  require(is_unitary(u, 2), "single-qubit gate is not unitary");
  const int v = topology_->node_of_qubit(qubit);
  Tensor m({2, 2}, std::vector<cplx>(u.begin(), u.end()));
  Tensor& t = tensors_[static_cast<std::size_t>(v)];
  t = absorb_matrix(m, t, topology_->qubit_axis(qubit));
}

void TTNState::apply_local_two_qubit_gate(const Matrix4& u, int q0, int q1) {
  require(q0 != q1, "two-qubit gate needs distinct qubits");
  require(is_unitary(u, 4), "two-qubit gate is not unitary");
  const int v = topology_->node_of_qubit(q0);
  require(topology_->node_of_qubit(q1) == v, "apply_local_two_qubit_gate: qubits live on different nodes");
  Tensor g({2, 2, 2, 2}, std::vector<cplx>(u.begin(), u.end()));
  Tensor& t = tensors_[static_cast<std::size_t>(v)];
  const std::size_t a0 = topology_->qubit_axis(q0), a1 = topology_->qubit_axis(q1);
  const std::pair<std::size_t, std::size_t> pairs[2] = {{2, a0}, {3, a1}};
  Tensor out = contract(g, t, pairs);  // axes: out0, out1, remaining axes of t
  std::vector<std::size_t> perm;
  std::size_t next = 2;
  for (std::size_t a = 0; a < t.rank(); ++a) {
    if (a == a0)
      perm.push_back(0);
    else if (a == a1)
      perm.push_back(1);
    else
      perm.push_back(next++);
  }
  t = out.permuted(perm);
}

double TTNState::isometry_error() const {
  if (!center_) return 0.0;
  const auto& topo = *topology_;
  std::vector<int> toward;
  order_away_from(topo, *center_, toward);
  double worst = 0.0;
  for (int v = 0; v < topo.num_nodes(); ++v) {
    if (v == *center_) continue;
    const Tensor& t = tensor(v);
    const std::size_t k = topo.bond_axis(v, toward[static_cast<std::size_t>(v)]);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < t.rank(); ++a)
      if (a != k) pairs.emplace_back(a, a);
    Tensor g = contract(t.conj(), t, pairs);
    worst = std::max(worst, relative_distance(g, Tensor::identity(t.dim(k))) * std::sqrt(double(t.dim(k))));
  }
  return worst;
}

TTNState canonicalize(const TTNState& s, int center) {
  TTNState out = s;
  out.canonicalize(center);
  return out;
}

double norm(const TTNState& s) {
  if (s.center()) return s.tensor(*s.center()).norm();
  TTNState c = s;
  c.canonicalize(s.topology().root());
  return c.tensor(*c.center()).norm();
}

TTNState apply_single_qubit_gate(const TTNState& s, const Matrix2& u, int qubit) {
  TTNState out = s;
  out.apply_single_qubit_gate(u, qubit);
  return out;
}

cplx overlap(const TTNState& a, const TTNState& b) {
  require(a.topology() == b.topology(), "overlap: topology mismatch");
  const auto& topo = a.topology();
  std::vector<Tensor> msg(static_cast<std::size_t>(topo.num_nodes()));
  auto phys = [](int q) { return labels::phys(q); };
  for (int v : topo.post_order()) {
    std::vector<Tensor> ops;
    ops.push_back(labeled_node_tensor(a, v, labels::bra_bond, phys).conj());
    ops.push_back(labeled_node_tensor(b, v, labels::ket_bond, phys));
    for (int c : topo.node(v).children) ops.push_back(std::move(msg[static_cast<std::size_t>(c)]));
    msg[static_cast<std::size_t>(v)] = contract_network(std::move(ops));
  }
  const Tensor& root = msg[static_cast<std::size_t>(topo.root())];
  return root[0];
}

cplx amplitude(const TTNState& s, const Bitstring& bits) {
  const auto& topo = s.topology();
  require(bits.size() == static_cast<std::size_t>(topo.num_qubits()), "bitstring length does not match qubit count");
  std::vector<Tensor> ops;
  auto phys = [](int q) { return labels::phys(q); };
  for (int v = 0; v < topo.num_nodes(); ++v) {
    Tensor t = labeled_node_tensor(s, v, labels::ket_bond, phys);
    for (int q : topo.node(v).qubits) {
      const auto b = bits[static_cast<std::size_t>(q)];
      require(b <= 1, "bits must be 0 or 1");
      Tensor e({2});
      e[b] = 1.0;
      e.set_labels({labels::phys(q)});
      t = contract_labeled(t, e);
    }
    ops.push_back(std::move(t));
  }
  return contract_network(std::move(ops))[0];
}

std::uint64_t memory_footprint(const TTNState& s) {
  std::uint64_t m = 0;
  for (const auto& t : s.tensors()) m += t.size();
  return m;
}

std::vector<cplx> to_statevector(const TTNState& s, int max_qubits) {
  const auto& topo = s.topology();
  const int n = topo.num_qubits();
  if (n > max_qubits)
    fail(ErrorKind::InvalidArgument,
         "to_statevector: " + std::to_string(n) + " qubits exceeds the dense cap of " + std::to_string(max_qubits));
  std::vector<Tensor> msg(static_cast<std::size_t>(topo.num_nodes()));
  auto phys = [](int q) { return labels::phys(q); };
  for (int v : topo.post_order()) {
    std::vector<Tensor> ops;
    ops.push_back(labeled_node_tensor(s, v, labels::ket_bond, phys));
    for (int c : topo.node(v).children) ops.push_back(std::move(msg[static_cast<std::size_t>(c)]));
    msg[static_cast<std::size_t>(v)] = contract_network(std::move(ops));
  }
  std::vector<Label> order;
  for (int q = 0; q < n; ++q) order.push_back(labels::phys(q));
  Tensor& root = msg[static_cast<std::size_t>(topo.root())];
  std::vector<std::size_t> perm;
  for (Label l : order) perm.push_back(root.axis_of(l));
  Tensor dense = root.permuted(perm);
  return {dense.data().begin(), dense.data().end()};
}

}  // namespace ttn
