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

#include "ttn/svd_baseline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "axis_ops.hpp"
#include "ttn/error.hpp"

namespace ttn {
namespace {

using detail::first_axis_to;
using detail::last_axis_to;

Matrix4 to_matrix4(const std::vector<cplx>& m) {
  Matrix4 out{};
  std::copy(m.begin(), m.end(), out.begin());
  return out;
}

Matrix2 to_matrix2(const std::vector<cplx>& m) {
  Matrix2 out{};
  std::copy(m.begin(), m.end(), out.begin());
  return out;
}

}  // namespace

std::vector<double> CompressionReport::step_fidelities() const {
  std::vector<double> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.fidelity);
  return out;
}

double error_per_gate(double fidelity, int two_qubit_gates) {
  if (two_qubit_gates <= 0) return 0.0;
  return 1.0 - std::pow(std::clamp(fidelity, 0.0, 1.0), 1.0 / two_qubit_gates);
}

GateFactors split_gate(const Matrix4& u) {
  require(is_unitary(u, 4), "split_gate: matrix is not unitary");
  // M[(oa ia), (ob ib)] = U[(oa ob), (ia ib)]
  Tensor m({4, 4});
  for (int oa = 0; oa < 2; ++oa)
    for (int ob = 0; ob < 2; ++ob)
      for (int ia = 0; ia < 2; ++ia)
        for (int ib = 0; ib < 2; ++ib)
          m[static_cast<std::size_t>((oa * 2 + ia) * 4 + ob * 2 + ib)] =
              u[static_cast<std::size_t>((oa * 2 + ob) * 4 + ia * 2 + ib)];
  const std::size_t left = 0;
  SvdResult r = svd_split(m, std::span(&left, 1), 4, 1e-14);
  const std::size_t k = r.s.size();
  GateFactors f;
  f.a = Tensor({2, 2, k});
  f.b = Tensor({2, 2, k});
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t j = 0; j < k; ++j) {
      f.a[x * k + j] = r.u[x * k + j] * r.s[j];
      f.b[x * k + j] = r.vh[j * 4 + x];
    }
  return f;
}

double apply_gate_svd_inplace(TTNState& s, const Matrix4& u, int q0, int q1, const BondSpec& caps, double cutoff) {
  const auto& topo = s.topology();
  require(q0 >= 0 && q0 < topo.num_qubits() && q1 >= 0 && q1 < topo.num_qubits() && q0 != q1,
          "apply_gate_svd: invalid qubit pair");
  require(!caps.empty() && caps.caps().size() == static_cast<std::size_t>(topo.num_nodes()),
          "apply_gate_svd: bond caps do not match the topology");
  require(cutoff >= 0.0 && cutoff < 1.0, "apply_gate_svd: cutoff must lie in [0, 1)");
  const int a = topo.node_of_qubit(q0);
  const int b = topo.node_of_qubit(q1);
  if (a == b) {
    s.apply_local_two_qubit_gate(u, q0, q1);
    s.move_center(a);
    s.normalize();
    return 1.0;
  }
  const GateFactors g = split_gate(u);
  s.move_center(a);
  std::vector<Tensor> ts = s.tensors();

  // A_k on q0: result axes (out, k, rest...) -> out back in place, k last.
  {
    const std::size_t qa = topo.qubit_axis(q0);
    const std::pair<std::size_t, std::size_t> pair{1, qa};
    Tensor t = contract(g.a, ts[static_cast<std::size_t>(a)], std::span(&pair, 1));
    std::vector<std::size_t> perm;
    const std::size_t r = t.rank();  // out, k, then rank-1 remaining axes
    for (std::size_t i = 0; i + 1 < r; ++i) {
      if (i == qa)
        perm.push_back(0);
      else
        perm.push_back(i < qa ? i + 2 : i + 1);
    }
    perm.push_back(1);
    ts[static_cast<std::size_t>(a)] = t.permuted(perm);
  }

  // Carry the k axis to b with exact QR steps; bonds on the path may grow.
  const auto path = topo.path(a, b);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int v = path[i], w = path[i + 1];
    Tensor& tv = ts[static_cast<std::size_t>(v)];
    const std::size_t kaxis = tv.rank() - 1;
    const std::size_t bond = topo.bond_axis(v, w);
    const std::size_t right[2] = {bond, kaxis};
    QrResult qr = qr_split(tv, complement_axes(tv.rank(), right));
    tv = last_axis_to(qr.q, bond);
    // R has axes (new, old, k); fold it into w's bond axis and keep k last.
    Tensor& tw = ts[static_cast<std::size_t>(w)];
    const std::size_t wb = topo.bond_axis(w, v);
    const std::pair<std::size_t, std::size_t> pair{1, wb};
    Tensor t = contract(qr.r, tw, std::span(&pair, 1));  // new, k, rest of w
    std::vector<std::size_t> perm;
    const std::size_t rank = t.rank();
    for (std::size_t j = 0; j + 1 < rank; ++j) {
      if (j == wb)
        perm.push_back(0);
      else
        perm.push_back(j < wb ? j + 2 : j + 1);
    }
    perm.push_back(1);
    tw = t.permuted(perm);
  }

  // B_k on q1, summing the threaded k axis.
  {
    Tensor& tb = ts[static_cast<std::size_t>(b)];
    const std::size_t qb = topo.qubit_axis(q1);
    const std::pair<std::size_t, std::size_t> pairs[2] = {{1, qb}, {2, tb.rank() - 1}};
    Tensor t = contract(g.b, tb, pairs);  // out, rest of b
    tb = first_axis_to(t, qb);
  }

  // Truncation sweep from b back to a; the center travels with each split.
  double estimate = 1.0;
  for (std::size_t i = path.size() - 1; i > 0; --i) {
    const int v = path[i], w = path[i - 1];
    Tensor& tv = ts[static_cast<std::size_t>(v)];
    const std::size_t bond = topo.bond_axis(v, w);
    const int edge = topo.node(v).parent == w ? v : w;
    SvdResult r = svd_split(tv, complement_axes(tv.rank(), std::span(&bond, 1)), caps.cap(edge), cutoff);
    estimate *= 1.0 - r.discarded_weight;
    tv = last_axis_to(r.u, bond);
    Tensor sv = r.vh;
    const std::size_t chi = r.s.size();
    const std::size_t stride = sv.size() / chi;
    for (std::size_t x = 0; x < chi; ++x)
      for (std::size_t y = 0; y < stride; ++y) sv[x * stride + y] *= r.s[x];
    Tensor& tw = ts[static_cast<std::size_t>(w)];
    tw = detail::absorb_matrix(sv, tw, topo.bond_axis(w, v));
  }
  TTNState next(s.topology_ptr(), std::move(ts), a);
  next.normalize();
  s = std::move(next);
  return estimate;
}

std::pair<TTNState, double> apply_gate_svd(const TTNState& s, const Matrix4& u, int q0, int q1, std::size_t chi,
                                           double cutoff) {
  require(chi >= 1, "apply_gate_svd: chi must be at least 1");
  TTNState out = s;
  const double est = apply_gate_svd_inplace(out, u, q0, q1, BondSpec::uniform(s.topology(), chi), cutoff);
  return {std::move(out), est};
}

double truncate_bonds(TTNState& s, const BondSpec& caps) {
  const auto& topo = s.topology();
  require(caps.caps().size() == static_cast<std::size_t>(topo.num_nodes()),
          "truncate_bonds: bond caps do not match the topology");
  double kept = 1.0;
  bool any = false;
  for (int e : topo.edges()) any = any || s.bond_dim(e) > caps.cap(e);
  if (!any) {
    s.normalize();
    return 1.0;
  }
  // Pre-order walk from the root; each oversized bond is cut while the
  // center sits on its parent side.
  std::vector<int> order{topo.root()};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : topo.node(order[i]).children) order.push_back(c);
  for (int e : order) {
    if (e == topo.root() || s.bond_dim(e) <= caps.cap(e)) continue;
    const int p = topo.node(e).parent;
    s.move_center(p);
    std::vector<Tensor> ts = s.tensors();
    Tensor& tp = ts[static_cast<std::size_t>(p)];
    const std::size_t bond = topo.bond_axis(p, e);
    const auto left = complement_axes(tp.rank(), std::span(&bond, 1));
    SvdResult r = svd_split(tp, left, caps.cap(e), 0.0);
    kept *= 1.0 - r.discarded_weight;
    tp = last_axis_to(r.u, bond);
    Tensor sv = r.vh;
    const std::size_t chi = r.s.size();
    const std::size_t stride = sv.size() / chi;
    for (std::size_t x = 0; x < chi; ++x)
      for (std::size_t y = 0; y < stride; ++y) sv[x * stride + y] *= r.s[x];
    Tensor& te = ts[static_cast<std::size_t>(e)];
    te = detail::absorb_matrix(sv, te, 0);
    s = TTNState(s.topology_ptr(), std::move(ts), e);
  }
  s.normalize();
  return kept;
}

std::pair<TTNState, CompressionReport> run_circuit_svd(const TTNState& init, const Circuit& c, const BondSpec& caps,
                                                       double cutoff) {
  require(c.num_qubits() == init.num_qubits(), "run_circuit_svd: circuit and state sizes differ");
  const auto start = std::chrono::steady_clock::now();
  TTNState s = init;
  s.normalize();
  CompressionReport rep;
  rep.method = "svd";
  int step = 0;
  const auto& gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (!g.two_qubit()) {
      s.apply_single_qubit_gate(to_matrix2(g.matrix()), g.targets[0]);
      continue;
    }
    ++rep.two_qubit_gates;
    const auto t0 = std::chrono::steady_clock::now();
    const double f = apply_gate_svd_inplace(s, to_matrix4(g.matrix()), g.targets[0], g.targets[1], caps, cutoff);
    StepRecord r;
    r.step = step++;
    r.gate_ids = {static_cast<int>(i)};
    r.fidelity = f;
    rep.fidelity *= f;
    r.cumulative = rep.fidelity;
    r.epsilon = error_per_gate(rep.fidelity, rep.two_qubit_gates);
    r.memory = memory_footprint(s);
    rep.peak_memory = std::max(rep.peak_memory, r.memory);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.steps.push_back(std::move(r));
  }
  rep.epsilon = error_per_gate(rep.fidelity, rep.two_qubit_gates);
  rep.memory = memory_footprint(s);
  rep.peak_memory = std::max(rep.peak_memory, rep.memory);
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {std::move(s), std::move(rep)};
}

std::pair<TTNState, CompressionReport> run_circuit_svd(const TTNState& init, const Circuit& c, std::size_t chi,
                                                       double cutoff) {
  require(chi >= 1, "run_circuit_svd: chi must be at least 1");
  return run_circuit_svd(init, c, BondSpec::uniform(init.topology(), chi), cutoff);
}

}  // namespace ttn
