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

#include <utility>

#include "ttn/circuits.hpp"
#include "ttn/report.hpp"
#include "ttn/state.hpp"

namespace ttn {

/// Operator-Schmidt factors of a two-qubit gate: U = sum_k A_k (x) B_k.
/// a has axes (out_q0, in_q0, k) and carries the singular values; b has
/// axes (out_q1, in_q1, k).
struct GateFactors {
  Tensor a;
  Tensor b;
};
GateFactors split_gate(const Matrix4& u);

/// Applies a two-qubit gate by threading its Schmidt bond along the tree path
/// between the two qubits' nodes, then truncates every path bond with an SVD
/// to its cap while walking back. Returns the product of kept-weight
/// fractions; the state is left normalized with its center on q0's node.
double apply_gate_svd_inplace(TTNState& s, const Matrix4& u, int q0, int q1, const BondSpec& caps,
                              double cutoff = 0.0);

std::pair<TTNState, double> apply_gate_svd(const TTNState& s, const Matrix4& u, int q0, int q1, std::size_t chi,
                                           double cutoff = 0.0);

/// Truncates every bond that exceeds its cap; returns the kept-weight
/// product and leaves the state normalized.
double truncate_bonds(TTNState& s, const BondSpec& caps);

std::pair<TTNState, CompressionReport> run_circuit_svd(const TTNState& init, const Circuit& c, const BondSpec& caps,
                                                       double cutoff = 0.0);
std::pair<TTNState, CompressionReport> run_circuit_svd(const TTNState& init, const Circuit& c, std::size_t chi,
                                                       double cutoff = 0.0);

}  // namespace ttn
