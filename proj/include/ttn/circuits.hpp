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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ttn/graphs.hpp"
#include "ttn/state.hpp"
#include "ttn/topology.hpp"

namespace ttn {

enum class GateKind { H, RX, ZZ, U1, U2 };

const char* gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> targets;
  double param = 0.0;        // RX: beta, ZZ: theta
  std::vector<cplx> raw;  // U1 / U2 only

  /// RX(b) = exp(-i b/2 X), ZZ(t) = exp(-i t/2 Z(x)Z).
  std::vector<cplx> matrix() const;
  bool two_qubit() const noexcept { return targets.size() == 2; }

  static Gate h(int q);
  static Gate rx(int q, double beta);
  static Gate zz(int a, int b, double theta);
  static Gate unitary(int q, const Matrix2& m);
  static Gate unitary(int a, int b, const Matrix4& m);

  bool operator==(const Gate&) const = default;
};

struct CircuitMeta {
  std::string family;
  int depth = 0;  // D for random circuits, p for QAOA
  std::uint64_t seed = 0;
  std::string rng = "mt19937_64";
  std::string graph;
  bool operator==(const CircuitMeta&) const = default;
};

class Circuit {
 public:
  explicit Circuit(int num_qubits);

  void add(Gate g);
  int num_qubits() const noexcept { return n_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  int two_qubit_count() const noexcept;
  CircuitMeta& meta() noexcept { return meta_; }
  const CircuitMeta& meta() const noexcept { return meta_; }

  bool operator==(const Circuit&) const = default;

 private:
  int n_;
  std::vector<Gate> gates_;
  CircuitMeta meta_;
};

/// Q from the QR decomposition of a 4x4 complex Gaussian matrix (standard
/// normal real and imaginary parts). With `phase_fix` the columns of Q are
/// multiplied by the phases of R's diagonal, which makes Q Haar distributed.
Matrix4 random_two_qubit_gate(std::mt19937_64& rng, bool phase_fix = true);

/// Per depth: pairs (0,1),(2,3),... then (1,2),(3,4),...; N-1 gates each.
Circuit brickwall_circuit(int n, int depth, std::mt19937_64& rng);

/// Qubit pairs of one tree-like depth: all pairs inside each leaf, then for
/// every internal node (deepest first) one pair per unordered pair of its
/// children, acting on the first qubit of each child's subtree.
std::vector<std::pair<int, int>> treelike_pairs(const TreeTopology& t);

Circuit treelike_circuit(const TreeTopology& t, int depths, std::mt19937_64& rng);

/// Intra-leaf all-to-all per depth plus `n_inter` inter-leaf gates sampled
/// uniformly with replacement over all cross-leaf qubit pairs. Inter gate j
/// is appended to depth j mod depths.
Circuit treelike_random_inter(const TreeTopology& t, int n_inter, int depths, std::mt19937_64& rng);

/// H on every qubit, then per layer ZZ(gamma*w) on every edge (sorted) and
/// RX(beta) on every qubit.
Circuit qaoa_maxcut_circuit(const Graph& g, const std::vector<double>& betas, const std::vector<double>& gammas);

struct QaoaParams {
  std::vector<double> betas;   // uniform in [0, pi)
  std::vector<double> gammas;  // uniform in [0, 2 pi)
};

/// For each layer draws gamma, then beta.
QaoaParams sample_qaoa_params(int p, std::mt19937_64& rng);

}  // namespace ttn
