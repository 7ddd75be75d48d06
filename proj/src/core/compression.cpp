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

#include "ttn/compression.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>

#include "labels.hpp"
#include "ttn/error.hpp"
#include "ttn/oracle.hpp"
#include "ttn/svd_baseline.hpp"

namespace ttn {
namespace {

constexpr double kZeroEnvironment = 1e-28;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void validate_batch(const GateBatch& batch, int n) {
  for (const auto& g : batch) {
    require(g.q0 >= 0 && g.q0 < n && g.q1 >= 0 && g.q1 < n, "gate batch: qubit index out of range");
    require(g.q0 != g.q1, "gate batch: a two-qubit gate needs distinct qubits");
    require(is_unitary(g.u, 4), "gate batch: matrix is not unitary");
  }
}

BondSpec resolve_caps(const SweepConfig& cfg, const TreeTopology& t) {
  if (cfg.caps.empty()) return BondSpec::structural(t);
  require(cfg.caps.caps().size() == static_cast<std::size_t>(t.num_nodes()),
          "bond caps do not match the target topology");
  return cfg.caps;
}

void check_config(const SweepConfig& cfg) {
  require(cfg.max_sweeps >= 1, "sweep count must be at least 1");
  require(cfg.threshold >= 0.0 && std::isfinite(cfg.threshold), "sweep threshold must be a finite nonnegative number");
}

void check_normalized(const TTNState& s) {
  const double n = norm(s);
  require(std::abs(n - 1.0) <= 1e-8, "input state is not normalized (norm " + std::to_string(n) + ")");
}

StepResult sweep(const TTNState& source, const GateBatch& batch, const SweepConfig& cfg, TTNState target) {
  const auto sched = sweep_schedule(target.topology());
  target.move_center(sched.front());
  OverlapNetwork net(source, batch, std::move(target), cfg.use_cache);

  StepResult out{net.target(), 0.0, {}, 0, 0.0};
  Tensor env = net.environment(sched.front());
  double f = std::norm(inner_product(net.target().tensor(sched.front()), env));
  out.initial_fidelity = f;
  double f_prev = f;
  for (int pass = 0; pass < cfg.max_sweeps; ++pass) {
    for (std::size_t i = 0; i < sched.size(); ++i) {
      if (i == 0 && pass > 0) continue;
      if (i > 0) {
        net.shift_center(sched[i]);
        env = net.environment(sched[i]);
      }
      UpdateResult u = update_tensor(env);
      net.update_center(std::move(u.tensor));
      f = u.fidelity;
      out.trace.push_back(f);
    }
    ++out.sweeps;
    if (f - f_prev < cfg.threshold) break;
    f_prev = f;
  }
  out.fidelity = std::min(f, 1.0);
  out.state = std::move(net).release_target();
  return out;
}

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

OverlapNetwork::OverlapNetwork(const TTNState& source, const GateBatch& batch, TTNState target, bool use_cache)
    : source_topo_(source.topology_ptr()), target_(std::move(target)) {
  const auto& topo = *source_topo_;
  const int n = topo.num_qubits();
  require(target_.num_qubits() == n, "overlap network: source and target qubit counts differ");
  validate_batch(batch, n);

  ket_.reserve(static_cast<std::size_t>(topo.num_nodes()));
  for (int v = 0; v < topo.num_nodes(); ++v)
    ket_.push_back(labeled_node_tensor(source, v, labels::ket_bond, [](int q) { return labels::phys(q, 0); }));

  std::vector<int> time(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < batch.size(); ++j) {
    const auto& g = batch[j];
    int& ta = time[static_cast<std::size_t>(g.q0)];
    int& tb = time[static_cast<std::size_t>(g.q1)];
    const Label in0 = labels::phys(g.q0, ta), out0 = labels::phys(g.q0, ta + 1);
    const Label in1 = labels::phys(g.q1, tb), out1 = labels::phys(g.q1, tb + 1);
    const int na = topo.node_of_qubit(g.q0), nb = topo.node_of_qubit(g.q1);
    if (na == nb) {
      Tensor t({2, 2, 2, 2}, std::vector<cplx>(g.u.begin(), g.u.end()));
      t.set_labels({out0, out1, in0, in1});
      pieces_.push_back({na, std::move(t)});
    } else {
      GateFactors f = split_gate(g.u);
      const Label bond = labels::gate_bond(static_cast<int>(j));
      f.a.set_labels({out0, in0, bond});
      f.b.set_labels({out1, in1, bond});
      pieces_.push_back({na, std::move(f.a)});
      pieces_.push_back({nb, std::move(f.b)});
    }
    ++ta;
    ++tb;
  }
  for (int q = 0; q < n; ++q) final_phys_.push_back(labels::phys(q, time[static_cast<std::size_t>(q)]));

  if (!target_.center()) target_.canonicalize(target_.topology().root());
  cached_ = use_cache && target_.topology() == topo;
  up_.resize(static_cast<std::size_t>(topo.num_nodes()));
  down_.resize(static_cast<std::size_t>(topo.num_nodes()));
}

std::vector<Label> OverlapNetwork::bra_labels(int v) const {
  const auto& topo = target_.topology();
  std::vector<Label> ls;
  for (int n : topo.neighbors(v)) ls.push_back(labels::bra_bond(topo.node(v).parent == n ? v : n));
  for (int q : topo.node(v).qubits) ls.push_back(final_phys_[static_cast<std::size_t>(q)]);
  return ls;
}

Tensor OverlapNetwork::bra_tensor(int v) const {
  Tensor t = target_.tensor(v).conj();
  t.set_labels(bra_labels(v));
  return t;
}

const Tensor& OverlapNetwork::message(int from, int to) {
  const auto& topo = *source_topo_;
  const bool up = topo.node(from).parent == to;
  auto& slot = up ? up_[static_cast<std::size_t>(from)] : down_[static_cast<std::size_t>(to)];
  if (slot) return *slot;
  std::vector<Tensor> ops;
  ops.push_back(bra_tensor(from));
  ops.push_back(ket_[static_cast<std::size_t>(from)]);
  for (const auto& p : pieces_)
    if (p.node == from) ops.push_back(p.t);
  for (int n : topo.neighbors(from))
    if (n != to) ops.push_back(message(n, from));
  slot = contract_network(std::move(ops));
  ++computed_;
  return *slot;
}

Tensor OverlapNetwork::environment(int v) {
  if (!cached_) return environment_uncached(v);
  const auto& topo = *source_topo_;
  require(v >= 0 && v < topo.num_nodes(), "environment: unknown node");
  std::vector<Tensor> ops;
  ops.push_back(ket_[static_cast<std::size_t>(v)]);
  for (const auto& p : pieces_)
    if (p.node == v) ops.push_back(p.t);
  for (int n : topo.neighbors(v)) ops.push_back(message(n, v));
  const auto out = bra_labels(v);
  Tensor env = contract_network(std::move(ops), out);
  env.clear_labels();
  return env;
}

Tensor OverlapNetwork::environment_uncached(int v) const {
  const auto& tt = target_.topology();
  require(v >= 0 && v < tt.num_nodes(), "environment: unknown node");
  std::vector<Tensor> ops(ket_.begin(), ket_.end());
  for (const auto& p : pieces_) ops.push_back(p.t);
  for (int u = 0; u < tt.num_nodes(); ++u)
    if (u != v) ops.push_back(bra_tensor(u));
  const auto out = bra_labels(v);
  Tensor env = contract_network(std::move(ops), out);
  env.clear_labels();
  return env;
}

cplx OverlapNetwork::overlap() {
  const int c = *target_.center();
  return inner_product(target_.tensor(c), environment(c));
}

void OverlapNetwork::update_center(Tensor t) {
  const int c = *target_.center();
  require(t.shape() == target_.tensor(c).shape(), "update_center: tensor shape changed");
  target_.set_tensor(c, std::move(t), true);
  invalidate(c);
}

void OverlapNetwork::shift_center(int neighbor) {
  const int c = *target_.center();
  target_.shift_center(neighbor);
  invalidate(c);
  invalidate(neighbor);
}

void OverlapNetwork::invalidate(int changed) {
  if (!cached_) return;
  const auto& topo = *source_topo_;
  for (int e : topo.edges()) {
    if (topo.in_subtree(changed, e))
      up_[static_cast<std::size_t>(e)].reset();
    else
      down_[static_cast<std::size_t>(e)].reset();
  }
}

UpdateResult update_tensor(const Tensor& environment) {
  const double f = environment.squared_norm();
  if (!(f > kZeroEnvironment))
    fail(ErrorKind::Numerical, "update_tensor: environment vanishes; target is orthogonal to the gated state");
  Tensor t = environment;
  t *= 1.0 / std::sqrt(f);
  return {std::move(t), f};
}

std::vector<int> sweep_schedule(const TreeTopology& t) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(2 * t.num_nodes() - 1));
  std::function<void(int)> visit = [&](int v) {
    order.push_back(v);
    for (int c : t.node(v).children) {
      visit(c);
      order.push_back(v);
    }
  };
  visit(t.root());
  return order;
}

StepResult compress_apply(const TTNState& s, const GateBatch& batch, const SweepConfig& cfg) {
  check_config(cfg);
  validate_batch(batch, s.num_qubits());
  check_normalized(s);
  const BondSpec caps = resolve_caps(cfg, s.topology());
  TTNState warm = s;
  for (const auto& g : batch) apply_gate_svd_inplace(warm, g.u, g.q0, g.q1, caps, 0.0);
  truncate_bonds(warm, caps);
  return sweep(s, batch, cfg, std::move(warm));
}

StepResult compress_apply(const TTNState& s, const GateBatch& batch, const SweepConfig& cfg, TopologyPtr target) {
  require(target != nullptr, "compress_apply: missing target topology");
  if (*target == s.topology()) return compress_apply(s, batch, cfg);
  check_config(cfg);
  require(target->num_qubits() == s.num_qubits(), "compress_apply: target topology has a different qubit count");
  validate_batch(batch, s.num_qubits());
  check_normalized(s);
  const BondSpec caps = resolve_caps(cfg, *target);
  auto psi = to_statevector(s);
  for (const auto& g : batch) {
    const int q[2] = {g.q0, g.q1};
    apply_gate_dense(psi, s.num_qubits(), g.u, q);
  }
  TTNState init = TTNState::from_statevector(target, psi, caps);
  init.normalize();
  return sweep(s, batch, cfg, std::move(init));
}

std::pair<TTNState, CompressionReport> run_circuit(const TTNState& init, const Circuit& c, const SweepConfig& cfg,
                                                   const BatchPolicy& policy) {
  require(c.num_qubits() == init.num_qubits(), "run_circuit: circuit and state sizes differ");
  require(policy.gates_per_step >= 1, "run_circuit: gates_per_step must be at least 1");
  check_config(cfg);
  const auto start = Clock::now();
  TTNState s = init;
  s.normalize();
  SweepConfig step_cfg = cfg;
  step_cfg.caps = resolve_caps(cfg, s.topology());
  const auto& topo = s.topology();

  CompressionReport rep;
  rep.method = "dmrg";
  GateBatch pending;
  std::vector<bool> busy(static_cast<std::size_t>(c.num_qubits()), false);

  auto flush = [&]() {
    if (pending.empty()) return;
    const bool local = std::all_of(pending.begin(), pending.end(), [&](const TwoQubitGate& g) {
      return topo.node_of_qubit(g.q0) == topo.node_of_qubit(g.q1);
    });
    if (local) {
      for (const auto& g : pending) s.apply_local_two_qubit_gate(g.u, g.q0, g.q1);
    } else {
      const auto t0 = Clock::now();
      StepResult r = compress_apply(s, pending, step_cfg);
      s = std::move(r.state);
      StepRecord rec;
      rec.step = static_cast<int>(rep.steps.size());
      for (const auto& g : pending) rec.gate_ids.push_back(g.id);
      rec.fidelity = r.fidelity;
      rep.fidelity *= r.fidelity;
      rec.cumulative = rep.fidelity;
      rec.epsilon = error_per_gate(rep.fidelity, rep.two_qubit_gates);
      rec.memory = memory_footprint(s);
      rep.peak_memory = std::max(rep.peak_memory, rec.memory);
      rec.sweeps = r.sweeps;
      rec.trace = std::move(r.trace);
      rec.elapsed_ms = ms_since(t0);
      rep.steps.push_back(std::move(rec));
    }
    pending.clear();
    std::fill(busy.begin(), busy.end(), false);
  };

  const auto& gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (!g.two_qubit()) {
      if (busy[static_cast<std::size_t>(g.targets[0])]) flush();
      s.apply_single_qubit_gate(to_matrix2(g.matrix()), g.targets[0]);
      continue;
    }
    const int a = g.targets[0], b = g.targets[1];
    if (policy.layer && (busy[static_cast<std::size_t>(a)] || busy[static_cast<std::size_t>(b)])) flush();
    ++rep.two_qubit_gates;
    pending.push_back({to_matrix4(g.matrix()), a, b, static_cast<int>(i)});
    busy[static_cast<std::size_t>(a)] = busy[static_cast<std::size_t>(b)] = true;
    if (!policy.layer && static_cast<int>(pending.size()) >= policy.gates_per_step) flush();
  }
  flush();
  s.normalize();

  rep.epsilon = error_per_gate(rep.fidelity, rep.two_qubit_gates);
  rep.memory = memory_footprint(s);
  rep.peak_memory = std::max(rep.peak_memory, rep.memory);
  rep.wall_ms = ms_since(start);
  return {std::move(s), std::move(rep)};
}

}  // namespace ttn
