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
#include <string>
#include <vector>

namespace ttn {

struct StepRecord {
  int step = 0;
  std::vector<int> gate_ids;  // indices into the circuit's gate list
  double fidelity = 1.0;      // f of this step
  double cumulative = 1.0;    // running product of step fidelities
  double epsilon = 0.0;       // error per gate over the two-qubit gates seen so far
  std::uint64_t memory = 0;   // footprint after the step
  double elapsed_ms = 0.0;
  int sweeps = 0;
  std::vector<double> trace;  // f after every tensor update (dmrg only)
};

struct CompressionReport {
  std::string method;  // "dmrg" or "svd"
  std::vector<StepRecord> steps;
  int two_qubit_gates = 0;
  double fidelity = 1.0;  // product of step fidelities
  double epsilon = 0.0;
  std::uint64_t memory = 0;       // footprint of the final state
  std::uint64_t peak_memory = 0;  // largest footprint after any step
  double wall_ms = 0.0;

  std::vector<double> step_fidelities() const;
};

/// 1 - F^(1/n); zero when n == 0.
double error_per_gate(double fidelity, int two_qubit_gates);

}  // namespace ttn
