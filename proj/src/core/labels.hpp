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

#include "ttn/tensor.hpp"

// Label namespaces for the overlap networks built from two states and a gate
// batch. Bra and ket bonds live in separate namespaces so the two states may
// sit on different trees.
namespace ttn::labels {

inline constexpr Label kBra = Label{1} << 48;
inline constexpr Label kKet = Label{2} << 48;
inline constexpr Label kPhys = Label{3} << 48;
inline constexpr Label kGate = Label{4} << 48;

inline Label bra_bond(int edge) { return kBra + edge; }
inline Label ket_bond(int edge) { return kKet + edge; }
/// Physical leg of qubit q after `time` gates have acted on it.
inline Label phys(int q, int time = 0) { return kPhys + (Label{q} << 20) + time; }
inline Label gate_bond(int gate) { return kGate + gate; }

}  // namespace ttn::labels
