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

#include "ttn/tensor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "ttn/error.hpp"

namespace ttn {
namespace {

using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ColMat = Eigen::MatrixXcd;

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

std::string shape_string(const std::vector<std::size_t>& shape) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
  os << ")";
  return os.str();
}

bool is_identity(std::span<const std::size_t> perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

void check_axis_set(std::size_t rank, std::span<const std::size_t> axes, const char* what) {
  std::vector<bool> seen(rank, false);
  for (auto a : axes) {
    require(a < rank, std::string(what) + ": axis out of range");
    require(!seen[a], std::string(what) + ": duplicate axis");
    seen[a] = true;
  }
}

// Matrix view of t with `left` axes as rows, the complement as columns.
RowMat as_matrix(const Tensor& t, std::span<const std::size_t> left, std::vector<std::size_t>& right) {
  right = complement_axes(t.rank(), left);
  std::vector<std::size_t> perm(left.begin(), left.end());
  perm.insert(perm.end(), right.begin(), right.end());
  std::size_t rows = 1;
  for (auto a : left) rows *= t.dim(a);
  std::size_t cols = t.size() / rows;
  RowMat m(rows, cols);
  if (is_identity(perm)) {
    std::copy(t.data().begin(), t.data().end(), m.data());
  } else {
    Tensor p = t.permuted(perm);
    std::copy(p.data().begin(), p.data().end(), m.data());
  }
  return m;
}

template <class Matrix>
Tensor from_matrix(const Matrix& m, std::vector<std::size_t> shape) {
  RowMat rm = m;
  std::vector<cplx> data(rm.data(), rm.data() + rm.size());
  return Tensor(std::move(shape), std::move(data));
}

}  // namespace

Tensor::Tensor() : data_(1, cplx{0.0, 0.0}) {}

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  for (auto d : shape_) require(d >= 1, "tensor dimensions must be >= 1, got " + shape_string(shape_));
  data_.assign(product(shape_), cplx{0.0, 0.0});
}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<cplx> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  for (auto d : shape_) require(d >= 1, "tensor dimensions must be >= 1, got " + shape_string(shape_));
  require(product(shape_) == data_.size(), "tensor data size does not match shape " + shape_string(shape_));
}

Tensor Tensor::scalar(cplx value) { return Tensor({}, {value}); }

Tensor Tensor::identity(std::size_t n) {
  Tensor t({n, n});
  for (std::size_t i = 0; i < n; ++i) t.data_[i * n + i] = 1.0;
  return t;
}

cplx& Tensor::at(std::span<const std::size_t> index) {
  return const_cast<cplx&>(static_cast<const Tensor&>(*this).at(index));
}

const cplx& Tensor::at(std::span<const std::size_t> index) const {
  require(index.size() == rank(), "tensor index has wrong rank");
  std::size_t off = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    require(index[i] < shape_[i], "tensor index out of range");
    off = off * shape_[i] + index[i];
  }
  return data_[off];
}

Tensor& Tensor::set_labels(std::vector<Label> labels) {
  require(labels.size() == rank(), "label count does not match tensor rank");
  labels_ = std::move(labels);
  return *this;
}

std::size_t Tensor::axis_of(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  require(it != labels_.end(), "label not present on tensor");
  return static_cast<std::size_t>(it - labels_.begin());
}

Tensor Tensor::permuted(std::span<const std::size_t> perm) const {
  check_axis_set(rank(), perm, "permute");
  require(perm.size() == rank(), "permute: permutation has wrong length");
  std::vector<std::size_t> out_shape(rank());
  for (std::size_t i = 0; i < rank(); ++i) out_shape[i] = shape_[perm[i]];
  Tensor out;
  out.shape_ = out_shape;
  if (!labels_.empty()) {
    out.labels_.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i) out.labels_[i] = labels_[perm[i]];
  }
  if (is_identity(perm) || rank() <= 1) {
    out.data_ = data_;
    return out;
  }
  out.data_.resize(data_.size());

  std::vector<std::size_t> in_stride(rank());
  std::size_t s = 1;
  for (std::size_t i = rank(); i-- > 0;) {
    in_stride[i] = s;
    s *= shape_[i];
  }
  const std::size_t r = rank();
  std::vector<std::size_t> stride(r);
  for (std::size_t i = 0; i < r; ++i) stride[i] = in_stride[perm[i]];

  const std::size_t inner = out_shape[r - 1];
  const std::size_t inner_stride = stride[r - 1];
  std::vector<std::size_t> idx(r, 0);
  std::size_t in_off = 0;
  cplx* dst = out.data_.data();
  const cplx* src = data_.data();
  const std::size_t outer = data_.size() / inner;
  for (std::size_t o = 0; o < outer; ++o) {
    const cplx* p = src + in_off;
    for (std::size_t k = 0; k < inner; ++k) dst[k] = p[k * inner_stride];
    dst += inner;
    // odometer over axes r-2 .. 0
    for (std::size_t ax = r - 1; ax-- > 0;) {
      ++idx[ax];
      in_off += stride[ax];
      if (idx[ax] < out_shape[ax]) break;
      in_off -= stride[ax] * idx[ax];
      idx[ax] = 0;
    }
  }
  return out;
}

Tensor Tensor::reshaped(std::vector<std::size_t> shape) const { return Tensor(std::move(shape), data_); }

Tensor Tensor::conj() const {
  Tensor out = *this;
  for (auto& v : out.data_) v = std::conj(v);
  return out;
}

double Tensor::squared_norm() const noexcept {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return s;
}

double Tensor::norm() const noexcept { return std::sqrt(squared_norm()); }

Tensor& Tensor::operator*=(cplx factor) noexcept {
  for (auto& v : data_) v *= factor;
  return *this;
}

std::vector<std::size_t> complement_axes(std::size_t rank, std::span<const std::size_t> axes) {
  std::vector<bool> used(rank, false);
  for (auto a : axes) used.at(a) = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < rank; ++i)
    if (!used[i]) rest.push_back(i);
  return rest;
}

Tensor contract(const Tensor& a, const Tensor& b,
                std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<std::size_t> pa, pb;
  pa.reserve(pairs.size());
  pb.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    require(x < a.rank() && y < b.rank(), "contract: axis out of range");
    if (a.dim(x) != b.dim(y)) {
      fail(ErrorKind::InvalidArgument, "contract: dimension mismatch on paired axes (" + std::to_string(a.dim(x)) +
                                           " vs " + std::to_string(b.dim(y)) + ")");
    }
    pa.push_back(x);
    pb.push_back(y);
  }
  check_axis_set(a.rank(), pa, "contract");
  check_axis_set(b.rank(), pb, "contract");

  std::vector<std::size_t> free_a = complement_axes(a.rank(), pa);
  std::vector<std::size_t> free_b = complement_axes(b.rank(), pb);

  std::vector<std::size_t> perm_a = free_a;
  perm_a.insert(perm_a.end(), pa.begin(), pa.end());
  std::vector<std::size_t> perm_b = pb;
  perm_b.insert(perm_b.end(), free_b.begin(), free_b.end());

  std::size_t m = 1, k = 1, n = 1;
  std::vector<std::size_t> out_shape;
  for (auto x : free_a) {
    m *= a.dim(x);
    out_shape.push_back(a.dim(x));
  }
  for (auto x : pa) k *= a.dim(x);
  for (auto y : free_b) {
    n *= b.dim(y);
    out_shape.push_back(b.dim(y));
  }

  std::optional<Tensor> ta, tb;
  const cplx* da = a.data().data();
  const cplx* db = b.data().data();
  if (!is_identity(perm_a)) {
    ta = a.permuted(perm_a);
    da = ta->data().data();
  }
  if (!is_identity(perm_b)) {
    tb = b.permuted(perm_b);
    db = tb->data().data();
  }

  Tensor out(out_shape);
  Eigen::Map<const RowMat> ma(da, static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
  Eigen::Map<const RowMat> mb(db, static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n));
  Eigen::Map<RowMat> mc(out.data().data(), static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  mc.noalias() = ma * mb;

  if (!a.labels().empty() && !b.labels().empty()) {
    std::vector<Label> labels;
    labels.reserve(out_shape.size());
    for (auto x : free_a) labels.push_back(a.labels()[x]);
    for (auto y : free_b) labels.push_back(b.labels()[y]);
    out.set_labels(std::move(labels));
  }
  return out;
}

Tensor contract_labeled(const Tensor& a, const Tensor& b) {
  require(a.labeled() && b.labeled(), "contract_labeled: operands must carry labels");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) {
      if (a.labels()[i] == b.labels()[j]) pairs.emplace_back(i, j);
    }
  }
  Tensor out = contract(a, b, pairs);
  if (out.rank() == 0) out.clear_labels();
  return out;
}

Tensor contract_network(std::vector<Tensor> ops, std::span<const Label> output) {
  require(!ops.empty(), "contract_network: empty network");
  {
    std::unordered_map<Label, int> count;
    for (const auto& t : ops) {
      require(t.labeled(), "contract_network: every operand needs labels");
      std::vector<Label> ls = t.labels();
      std::sort(ls.begin(), ls.end());
      require(std::adjacent_find(ls.begin(), ls.end()) == ls.end(),
              "contract_network: repeated label within one operand");
      for (auto l : ls) ++count[l];
    }
    for (const auto& [l, c] : count) require(c <= 2, "contract_network: label appears more than twice");
  }

  auto shared_dims = [](const Tensor& a, const Tensor& b, double& shared) {
    bool any = false;
    shared = 1.0;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      for (std::size_t j = 0; j < b.rank(); ++j) {
        if (a.labels()[i] == b.labels()[j]) {
          shared *= static_cast<double>(a.dim(i));
          any = true;
        }
      }
    }
    return any;
  };

  while (ops.size() > 1) {
    std::size_t bi = 0, bj = 1;
    double best_size = std::numeric_limits<double>::infinity();
    double best_cost = best_size;
    bool found = false;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        double shared = 1.0;
        if (!shared_dims(ops[i], ops[j], shared)) continue;
        const double si = static_cast<double>(ops[i].size());
        const double sj = static_cast<double>(ops[j].size());
        const double result = si * sj / (shared * shared);
        const double cost = si * sj / shared;
        if (result < best_size || (result == best_size && cost < best_cost)) {
          best_size = result;
          best_cost = cost;
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) {
      // disconnected: outer product of the two smallest operands
      std::vector<std::size_t> order(ops.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](auto x, auto y) { return ops[x].size() < ops[y].size(); });
      bi = std::min(order[0], order[1]);
      bj = std::max(order[0], order[1]);
    }
    Tensor merged = contract_labeled(ops[bi], ops[bj]);
    ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(bj));
    ops[bi] = std::move(merged);
  }

  Tensor result = std::move(ops.front());
  if (!output.empty()) {
    require(output.size() == result.rank(), "contract_network: output labels do not match open labels");
    std::vector<std::size_t> perm;
    perm.reserve(output.size());
    for (auto l : output) perm.push_back(result.axis_of(l));
    result = result.permuted(perm);
  }
  return result;
}

cplx inner_product(const Tensor& a, const Tensor& b) {
  require(a.shape() == b.shape(), "inner_product: shape mismatch");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double relative_distance(const Tensor& a, const Tensor& b) {
  require(a.shape() == b.shape(), "relative_distance: shape mismatch");
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += std::norm(a[i] - b[i]);
  const double nb = b.squared_norm();
  return nb > 0.0 ? std::sqrt(diff / nb) : std::sqrt(diff);
}

QrResult qr_split(const Tensor& t, std::span<const std::size_t> left_axes) {
  check_axis_set(t.rank(), left_axes, "qr_split");
  require(!left_axes.empty() && left_axes.size() < t.rank(), "qr_split: left axes must be a nonempty proper subset");
  std::vector<std::size_t> right;
  ColMat m = as_matrix(t, left_axes, right);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  const Eigen::Index k = std::min(rows, cols);

  Eigen::HouseholderQR<ColMat> qr(m);
  ColMat q = qr.householderQ() * ColMat::Identity(rows, k);
  ColMat r = qr.matrixQR().topRows(k).template triangularView<Eigen::Upper>();

  std::vector<std::size_t> q_shape, r_shape{static_cast<std::size_t>(k)};
  for (auto a : left_axes) q_shape.push_back(t.dim(a));
  q_shape.push_back(static_cast<std::size_t>(k));
  for (auto a : right) r_shape.push_back(t.dim(a));
  return {from_matrix(q, std::move(q_shape)), from_matrix(r, std::move(r_shape))};
}

SvdResult svd_split(const Tensor& t, std::span<const std::size_t> left_axes, std::size_t chi_max, double cutoff) {
  check_axis_set(t.rank(), left_axes, "svd_split");
  require(!left_axes.empty() && left_axes.size() < t.rank(), "svd_split: left axes must be a nonempty proper subset");
  require(chi_max >= 1, "svd_split: chi_max must be >= 1");
  require(cutoff >= 0.0, "svd_split: cutoff must be nonnegative");
  std::vector<std::size_t> right;
  ColMat m = as_matrix(t, left_axes, right);

  Eigen::BDCSVD<ColMat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const std::size_t full = static_cast<std::size_t>(sv.size());
  if (full == 0 || !(sv(0) > 0.0)) fail(ErrorKind::Numerical, "svd_split: tensor is identically zero");

  double total = 0.0;
  for (std::size_t i = 0; i < full; ++i) total += sv(i) * sv(i);
  std::size_t keep = 0;
  while (keep < full && sv(keep) > cutoff * sv(0)) ++keep;
  keep = std::max<std::size_t>(1, std::min({keep, chi_max, full}));
  double dropped = 0.0;
  for (std::size_t i = keep; i < full; ++i) dropped += sv(i) * sv(i);

  SvdResult out;
  out.s.assign(sv.data(), sv.data() + keep);
  out.discarded_weight = dropped / total;

  const auto kk = static_cast<Eigen::Index>(keep);
  std::vector<std::size_t> u_shape, v_shape{keep};
  for (auto a : left_axes) u_shape.push_back(t.dim(a));
  u_shape.push_back(keep);
  for (auto a : right) v_shape.push_back(t.dim(a));
  out.u = from_matrix(svd.matrixU().leftCols(kk), std::move(u_shape));
  out.vh = from_matrix(svd.matrixV().leftCols(kk).adjoint(), std::move(v_shape));
  return out;
}

}  // namespace ttn
