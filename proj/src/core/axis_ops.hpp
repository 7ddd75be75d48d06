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
#include <vector>

#include "ttn/tensor.hpp"

namespace ttn::detail {

// Contracts matrix m (new, old) into axis `axis` of t, keeping axis order.
inline Tensor absorb_matrix(const Tensor& m, const Tensor& t, std::size_t axis) {
  const std::pair<std::size_t, std::size_t> pair{1, axis};
  Tensor out = contract(m, t, std::span(&pair, 1));
  if (axis == 0) return out;
  std::vector<std::size_t> perm;
  for (std::size_t i = 1; i <= axis; ++i) perm.push_back(i);
  perm.push_back(0);
  for (std::size_t i = axis + 1; i < out.rank(); ++i) perm.push_back(i);
  return out.permuted(perm);
}

// Moves the last axis of t to position `axis`.
inline Tensor last_axis_to(const Tensor& t, std::size_t axis) {
  const std::size_t r = t.rank();
  if (axis == r - 1) return t;
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < axis; ++i) perm.push_back(i);
  perm.push_back(r - 1);
  for (std::size_t i = axis; i + 1 < r; ++i) perm.push_back(i);
  return t.permuted(perm);
}

// Moves the first axis of t to position `axis`.
inline Tensor first_axis_to(const Tensor& t, std::size_t axis) {
  if (axis == 0) return t;
  std::vector<std::size_t> perm;
  for (std::size_t i = 1; i <= axis; ++i) perm.push_back(i);
  perm.push_back(0);
  for (std::size_t i = axis + 1; i < t.rank(); ++i) perm.push_back(i);
  return t.permuted(perm);
}

}  // namespace ttn::detail
