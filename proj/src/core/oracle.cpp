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

#include "ttn/oracle.hpp"

#include <string>

#include "ttn/error.hpp"

namespace ttn {
namespace {

void check_size(int n, int max_qubits) {
  require(n >= 1, "dense simulation needs at least one qubit");
  if (n > max_qubits)
    fail(ErrorKind::InvalidArgument, "dense simulation limited to " + std::to_string(max_qubits) + " qubits, got " +
                                         std::to_string(n));
}

}  // namespace

void apply_gate_dense(std::vector<cplx>& psi, int num_qubits, std::span<const cplx> m, std::span<const int> targets) {
  require(psi.size() == (std::size_t{1} << num_qubits), "apply_gate_dense: vector size mismatch");
  if (targets.size() == 1) {
    require(m.size() == 4, "apply_gate_dense: expected a 2x2 matrix");
    const int q = targets[0];
    require(q >= 0 && q < num_qubits, "apply_gate_dense: qubit out of range");
    const std::size_t bit = std::size_t{1} << (num_qubits - 1 - q);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (i & bit) continue;
      const cplx x0 = psi[i], x1 = psi[i | bit];
      psi[i] = m[0] * x0 + m[1] * x1;
      psi[i | bit] = m[2] * x0 + m[3] * x1;
    }
    return;
  }
  require(targets.size() == 2 && m.size() == 16, "apply_gate_dense: expected a 4x4 matrix on two qubits");
  const int a = targets[0], b = targets[1];
  require(a >= 0 && a < num_qubits && b >= 0 && b < num_qubits && a != b, "apply_gate_dense: invalid qubit pair");
  const std::size_t ba = std::size_t{1} << (num_qubits - 1 - a);
  const std::size_t bb = std::size_t{1} << (num_qubits - 1 - b);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((i & ba) || (i & bb)) continue;
    const std::size_t idx[4] = {i, i | bb, i | ba, i | ba | bb};
    cplx x[4];
    for (int k = 0; k < 4; ++k) x[k] = psi[idx[k]];
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += m[static_cast<std::size_t>(r * 4 + k)] * x[k];
      psi[idx[r]] = acc;
    }
  }
}

std::vector<cplx> exact_simulate(const Circuit& c, int max_qubits) {
  check_size(c.num_qubits(), max_qubits);
  std::vector<cplx> psi(std::size_t{1} << c.num_qubits(), cplx{0.0});
  psi[0] = 1.0;
  return exact_simulate(c, std::move(psi), max_qubits);
}

std::vector<cplx> exact_simulate(const Circuit& c, std::vector<cplx> psi, int max_qubits) {
  check_size(c.num_qubits(), max_qubits);
  require(psi.size() == (std::size_t{1} << c.num_qubits()), "exact_simulate: initial vector has the wrong size");
  for (const Gate& g : c.gates()) {
    const auto m = g.matrix();
    apply_gate_dense(psi, c.num_qubits(), m, g.targets);
  }
  return psi;
}

double state_fidelity(std::span<const cplx> a, std::span<const cplx> b) {
  require(a.size() == b.size(), "state_fidelity: size mismatch");
  cplx ip = 0.0;
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ip += std::conj(a[i]) * b[i];
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  if (!(na > 0.0 && nb > 0.0)) fail(ErrorKind::Numerical, "state_fidelity: zero vector");
  return std::norm(ip) / (na * nb);
}

double exact_fidelity(const TTNState& s, const Circuit& c, int max_qubits) {
  require(s.num_qubits() == c.num_qubits(), "exact_fidelity: state and circuit sizes differ");
  const auto exact = exact_simulate(c, max_qubits);
  const auto approx = to_statevector(s, max_qubits);
  return state_fidelity(exact, approx);
}

}  // namespace ttn
