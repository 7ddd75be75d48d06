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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ttn {

using cplx = std::complex<double>;

/// Opaque index identifier used to wire tensors together. Labels never
/// influence numerics; they only decide which axes get summed.
using Label = std::int64_t;

/// Dense complex tensor stored row-major over its shape (the last axis varies
/// fastest). A rank-0 tensor holds a single scalar.
class Tensor {
 public:
  Tensor();
  explicit Tensor(std::vector<std::size_t> shape);
  Tensor(std::vector<std::size_t> shape, std::vector<cplx> data);

  static Tensor scalar(cplx value);
  static Tensor identity(std::size_t n);

  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  cplx& at(std::span<const std::size_t> index);
  const cplx& at(std::span<const std::size_t> index) const;

  bool labeled() const noexcept { return !labels_.empty() || shape_.empty(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  Tensor& set_labels(std::vector<Label> labels);
  Tensor& clear_labels() noexcept {
    labels_.clear();
    return *this;
  }
  std::size_t axis_of(Label label) const;

  /// out.shape[i] == shape[perm[i]]; labels follow their axes.
  Tensor permuted(std::span<const std::size_t> perm) const;
  /// Same data, new shape with equal element count. Labels are dropped.
  Tensor reshaped(std::vector<std::size_t> shape) const;
  Tensor conj() const;

  double squared_norm() const noexcept;
  double norm() const noexcept;
  Tensor& operator*=(cplx factor) noexcept;

 private:
  std::vector<std::size_t> shape_;
  std::vector<cplx> data_;
  std::vector<Label> labels_;
};

/// Sum over the paired axes. Result axes are the unpaired axes of `a` in
/// order, followed by the unpaired axes of `b`. Labels are propagated when
/// both operands carry them.
Tensor contract(const Tensor& a, const Tensor& b,
                std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// Contracts every label the two operands share.
Tensor contract_labeled(const Tensor& a, const Tensor& b);

/// Contracts a labeled network pairwise, greedily choosing the pair with the
/// smallest intermediate. Every label must appear at most twice overall.
/// When `output` is non-empty the result axes are ordered by it.
Tensor contract_network(std::vector<Tensor> operands, std::span<const Label> output = {});

/// Full contraction of conj(a) with b over all axes (shapes must match).
cplx inner_product(const Tensor& a, const Tensor& b);

/// ||a - b||_F / ||b||_F (absolute distance when b is zero).
double relative_distance(const Tensor& a, const Tensor& b);

struct QrResult {
  Tensor q;  // axes: left_axes..., bond
  Tensor r;  // axes: bond, remaining axes in original order
};

/// Thin QR with the `left_axes` grouped as rows. The new bond has dimension
/// min(prod(left dims), prod(right dims)).
QrResult qr_split(const Tensor& t, std::span<const std::size_t> left_axes);

struct SvdResult {
  Tensor u;   // axes: left_axes..., bond
  std::vector<double> s;
  Tensor vh;  // axes: bond, remaining axes in original order
  double discarded_weight = 0.0;
};

/// Truncated SVD. Keeps min(chi_max, #{s_i > cutoff * s_0}, rank) values
/// (at least one). discarded_weight = sum(dropped s^2) / sum(all s^2).
SvdResult svd_split(const Tensor& t, std::span<const std::size_t> left_axes, std::size_t chi_max,
                    double cutoff = 0.0);

/// Rows are the given axes (in order), columns the rest (in order).
std::vector<std::size_t> complement_axes(std::size_t rank, std::span<const std::size_t> axes);

}  // namespace ttn
