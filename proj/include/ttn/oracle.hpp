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

#include <span>
#include <vector>

#include "ttn/circuits.hpp"
#include "ttn/state.hpp"

namespace ttn {

/// Applies a 2x2 or 4x4 row-major matrix to a dense vector in place.
/// Qubit 0 is the most significant bit of the amplitude index.
void apply_gate_dense(std::vector<cplx>& psi, int num_qubits, std::span<const cplx> matrix,
                      std::span<const int> targets);

/// Exact statevector of the circuit applied to |0...0>.
std::vector<cplx> exact_simulate(const Circuit& c, int max_qubits = kDefaultDenseQubitCap);
/// Exact statevector of the circuit applied to `initial`.
std::vector<cplx> exact_simulate(const Circuit& c, std::vector<cplx> initial, int max_qubits = kDefaultDenseQubitCap);

/// |<a|b>|^2 / (|a|^2 |b|^2).
double state_fidelity(std::span<const cplx> a, std::span<const cplx> b);

/// Fidelity between a simulated TTN state and the exact output of the
/// circuit on |0...0>.
double exact_fidelity(const TTNState& s, const Circuit& c, int max_qubits = kDefaultDenseQubitCap);

}  // namespace ttn
