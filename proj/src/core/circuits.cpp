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

#include "ttn/circuits.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "ttn/error.hpp"

namespace ttn {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::RX:
      return "RX";
    case GateKind::ZZ:
      return "ZZ";
    case GateKind::U1:
      return "U1";
    case GateKind::U2:
      return "U2";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "H") return GateKind::H;
  if (name == "RX") return GateKind::RX;
  if (name == "ZZ") return GateKind::ZZ;
  if (name == "U1") return GateKind::U1;
  if (name == "U2") return GateKind::U2;
  fail(ErrorKind::InvalidArgument, "unknown gate kind '" + name + "'");
}

std::vector<cplx> Gate::matrix() const {
  const cplx i{0.0, 1.0};
  switch (kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::RX: {
      const double c = std::cos(param / 2.0), s = std::sin(param / 2.0);
      return {c, -i * s, -i * s, c};
    }
    case GateKind::ZZ: {
      const cplx m = std::exp(-i * (param / 2.0)), p = std::exp(i * (param / 2.0));
      std::vector<cplx> u(16, 0.0);
      u[0] = m;
      u[5] = p;
      u[10] = p;
      u[15] = m;
      return u;
    }
    case GateKind::U1:
    case GateKind::U2:
      return raw;
  }
  return {};
}

Gate Gate::h(int q) { return Gate{GateKind::H, {q}, 0.0, {}}; }
Gate Gate::rx(int q, double beta) { return Gate{GateKind::RX, {q}, beta, {}}; }
Gate Gate::zz(int a, int b, double theta) { return Gate{GateKind::ZZ, {a, b}, theta, {}}; }
Gate Gate::unitary(int q, const Matrix2& m) { return Gate{GateKind::U1, {q}, 0.0, {m.begin(), m.end()}}; }
Gate Gate::unitary(int a, int b, const Matrix4& m) { return Gate{GateKind::U2, {a, b}, 0.0, {m.begin(), m.end()}}; }

Circuit::Circuit(int num_qubits) : n_(num_qubits) { require(num_qubits >= 1, "circuit needs at least one qubit"); }

void Circuit::add(Gate g) {
  const bool two = g.kind == GateKind::ZZ || g.kind == GateKind::U2;
  require(g.targets.size() == (two ? 2u : 1u), std::string("gate ") + gate_kind_name(g.kind) + " has the wrong arity");
  for (int q : g.targets) require(q >= 0 && q < n_, "gate target out of range");
  if (two) require(g.targets[0] != g.targets[1], "two-qubit gate targets must be distinct");
  require(is_unitary(g.matrix(), two ? 4 : 2), std::string("gate ") + gate_kind_name(g.kind) + " is not unitary");
  gates_.push_back(std::move(g));
}

int Circuit::two_qubit_count() const noexcept {
  int c = 0;
  for (const auto& g : gates_) c += g.two_qubit() ? 1 : 0;
  return c;
}

Matrix4 random_two_qubit_gate(std::mt19937_64& rng, bool phase_fix) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Eigen::Matrix4cd a;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const double re = normal(rng);
        const double im = normal(rng);
        a(r, c) = cplx{re, im};
      }
    Eigen::HouseholderQR<Eigen::Matrix4cd> qr(a);
    Eigen::Matrix4cd q = qr.householderQ();
    const Eigen::Matrix4cd& r = qr.matrixQR();
    bool singular = false;
    for (int k = 0; k < 4; ++k) singular |= std::abs(r(k, k)) < 1e-12;
    if (singular) continue;
    if (phase_fix)
      for (int k = 0; k < 4; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
    Matrix4 u;
    for (int row = 0; row < 4; ++row)
      for (int col = 0; col < 4; ++col) u[static_cast<std::size_t>(4 * row + col)] = q(row, col);
    return u;
  }
}

Circuit brickwall_circuit(int n, int depth, std::mt19937_64& rng) {
  require(n >= 2, "brick-wall circuits need at least 2 qubits");
  require(depth >= 1, "brick-wall depth must be >= 1");
  Circuit c(n);
  for (int d = 0; d < depth; ++d) {
    for (int start : {0, 1})
      for (int q = start; q + 1 < n; q += 2) c.add(Gate::unitary(q, q + 1, random_two_qubit_gate(rng)));
  }
  c.meta().family = "brickwall";
  c.meta().depth = depth;
  return c;
}

namespace {

void require_treelike(const TreeTopology& t) {
  for (const auto& nd : t.nodes()) {
    if (!nd.children.empty())
      require(nd.qubits.empty(), "tree-like layouts need qubits on leaves only (node " + std::to_string(nd.id) + ")");
    else
      require(!nd.qubits.empty(), "tree-like layouts need every leaf to hold qubits");
  }
}

std::vector<int> leaves_in_order(const TreeTopology& t) {
  std::vector<int> leaves;
  for (const auto& nd : t.nodes())
    if (nd.children.empty()) leaves.push_back(nd.id);
  return leaves;
}

void add_intra(const TreeTopology& t, std::vector<std::pair<int, int>>& pairs) {
  for (int leaf : leaves_in_order(t)) {
    const auto& qs = t.node(leaf).qubits;
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j) pairs.emplace_back(qs[i], qs[j]);
  }
}

}  // namespace

std::vector<std::pair<int, int>> treelike_pairs(const TreeTopology& t) {
  require_treelike(t);
  std::vector<std::pair<int, int>> pairs;
  add_intra(t, pairs);
  std::vector<int> internal;
  for (const auto& nd : t.nodes())
    if (!nd.children.empty()) internal.push_back(nd.id);
  std::stable_sort(internal.begin(), internal.end(), [&](int a, int b) { return t.depth(a) > t.depth(b); });
  for (int v : internal) {
    const auto& ch = t.node(v).children;
    for (std::size_t i = 0; i < ch.size(); ++i)
      for (std::size_t j = i + 1; j < ch.size(); ++j)
        pairs.emplace_back(t.subtree_qubits(ch[i]).front(), t.subtree_qubits(ch[j]).front());
  }
  return pairs;
}

Circuit treelike_circuit(const TreeTopology& t, int depths, std::mt19937_64& rng) {
  require(depths >= 1, "tree-like depth count must be >= 1");
  const auto pairs = treelike_pairs(t);
  Circuit c(t.num_qubits());
  for (int d = 0; d < depths; ++d)
    for (const auto& [a, b] : pairs) c.add(Gate::unitary(a, b, random_two_qubit_gate(rng)));
  c.meta().family = "treelike-random";
  c.meta().depth = depths;
  return c;
}

Circuit treelike_random_inter(const TreeTopology& t, int n_inter, int depths, std::mt19937_64& rng) {
  require(n_inter >= 0, "inter-cluster gate count must be >= 0");
  require(depths >= 1, "tree-like depth count must be >= 1");
  require_treelike(t);
  std::vector<std::pair<int, int>> intra;
  add_intra(t, intra);
  std::vector<std::pair<int, int>> cross;
  for (int a = 0; a < t.num_qubits(); ++a)
    for (int b = a + 1; b < t.num_qubits(); ++b)
      if (t.node_of_qubit(a) != t.node_of_qubit(b)) cross.emplace_back(a, b);
  require(n_inter == 0 || !cross.empty(), "no inter-cluster pairs exist on a single-leaf tree");

  std::vector<std::vector<std::pair<int, int>>> inter(static_cast<std::size_t>(depths));
  if (n_inter > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, cross.size() - 1);
    for (int j = 0; j < n_inter; ++j) inter[static_cast<std::size_t>(j % depths)].push_back(cross[pick(rng)]);
  }
  Circuit c(t.num_qubits());
  for (int d = 0; d < depths; ++d) {
    for (const auto& [a, b] : intra) c.add(Gate::unitary(a, b, random_two_qubit_gate(rng)));
    for (const auto& [a, b] : inter[static_cast<std::size_t>(d)])
      c.add(Gate::unitary(a, b, random_two_qubit_gate(rng)));
  }
  c.meta().family = "treelike-inter";
  c.meta().depth = depths;
  return c;
}

Circuit qaoa_maxcut_circuit(const Graph& g, const std::vector<double>& betas, const std::vector<double>& gammas) {
  require(!betas.empty() && betas.size() == gammas.size(), "QAOA needs p >= 1 betas and gammas of equal length");
  require(g.num_edges() > 0, "QAOA MaxCut needs a graph with at least one edge");
  Circuit c(g.num_vertices());
  for (int q = 0; q < g.num_vertices(); ++q) c.add(Gate::h(q));
  for (std::size_t l = 0; l < betas.size(); ++l) {
    for (const auto& e : g.edges()) c.add(Gate::zz(e.u, e.v, gammas[l] * e.w));
    for (int q = 0; q < g.num_vertices(); ++q) c.add(Gate::rx(q, betas[l]));
  }
  c.meta().family = "qaoa";
  c.meta().depth = static_cast<int>(betas.size());
  return c;
}

QaoaParams sample_qaoa_params(int p, std::mt19937_64& rng) {
  require(p >= 1, "QAOA depth p must be >= 1");
  std::uniform_real_distribution<double> gamma(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> beta(0.0, std::numbers::pi);
  QaoaParams out;
  // generate_canonical may round up to the upper bound; keep intervals half-open
  auto draw = [&](auto& dist) {
    const double x = dist(rng);
    return x < dist.b() ? x : std::nextafter(dist.b(), 0.0);
  };
  for (int l = 0; l < p; ++l) {
    out.gammas.push_back(draw(gamma));
    out.betas.push_back(draw(beta));
  }
  return out;
}

}  // namespace ttn
