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

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "ttn/error.hpp"
#include "ttn/tensor.hpp"

namespace ttn {
namespace {

using testing::brute_contract;
using testing::random_tensor;
using testing::ravel;
using testing::unravel;

TEST(Tensor, DefaultIsZeroScalar) {
  Tensor t;
  EXPECT_EQ(t.rank(), 0u);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0], cplx(0.0));
  EXPECT_TRUE(t.labeled());
}

TEST(Tensor, RejectsZeroDimensionAndSizeMismatch) {
  EXPECT_THROW(Tensor({2, 0, 3}), Error);
  EXPECT_THROW(Tensor({2, 2}, std::vector<cplx>(3)), Error);
}

TEST(Tensor, PermutedMatchesIndexLoop) {
  std::mt19937_64 rng(11);
  const Tensor t = random_tensor({2, 3, 4, 5}, rng);
  const std::vector<std::size_t> perm{2, 0, 3, 1};
  const Tensor p = t.permuted(perm);
  ASSERT_EQ(p.shape(), (std::vector<std::size_t>{4, 2, 5, 3}));
  for (std::size_t f = 0; f < t.size(); ++f) {
    const auto idx = unravel(f, t.shape());
    std::vector<std::size_t> pidx(4);
    for (std::size_t i = 0; i < 4; ++i) pidx[i] = idx[perm[i]];
    EXPECT_EQ(p[ravel(pidx, p.shape())], t[f]);
  }
}

TEST(Tensor, LabelsFollowPermutationAndReshapeDropsThem) {
  Tensor t({2, 3});
  t.set_labels({7, 9});
  const std::size_t perm[2] = {1, 0};
  EXPECT_EQ(t.permuted(perm).labels(), (std::vector<Label>{9, 7}));
  EXPECT_TRUE(t.reshaped({6}).labels().empty());
  EXPECT_EQ(t.axis_of(9), 1u);
  EXPECT_THROW(t.axis_of(5), Error);
  EXPECT_THROW(t.set_labels({1}), Error);
}

TEST(Tensor, ContractMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Tensor a = random_tensor({2, 3, 4}, rng);
    Tensor b = random_tensor({4, 5, 2}, rng);
    a.set_labels({1, 2, 3});
    b.set_labels({3, 4, 1});
    const Tensor fast = contract_labeled(a, b);
    const Tensor ref = brute_contract(a, b);
    ASSERT_EQ(fast.labels(), ref.labels());
    EXPECT_LT(relative_distance(fast, ref), 1e-13);
  }
}

TEST(Tensor, ContractByAxisPairs) {
  std::mt19937_64 rng(5);
  const Tensor a = random_tensor({3, 4}, rng);
  const Tensor b = random_tensor({4, 2}, rng);
  const std::pair<std::size_t, std::size_t> pair{1, 0};
  const Tensor c = contract(a, b, std::span(&pair, 1));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < 4; ++j) s += a[i * 4 + j] * b[j * 2 + k];
      EXPECT_NEAR(std::abs(c[i * 2 + k] - s), 0.0, 1e-13);
    }
  const std::pair<std::size_t, std::size_t> bad{0, 0};
  EXPECT_THROW(contract(a, b, std::span(&bad, 1)), Error);
}

TEST(Tensor, NetworkMatchesPairwiseReference) {
  std::mt19937_64 rng(8);
  Tensor a = random_tensor({2, 3}, rng), b = random_tensor({3, 4, 2}, rng), c = random_tensor({4, 5}, rng);
  a.set_labels({1, 2});
  b.set_labels({2, 3, 6});
  c.set_labels({3, 4});
  const std::vector<Label> out{6, 4, 1};
  const Tensor net = contract_network({a, b, c}, out);
  Tensor ref = brute_contract(brute_contract(a, b), c);
  std::vector<std::size_t> perm;
  for (auto l : out) perm.push_back(ref.axis_of(l));
  ref = ref.permuted(perm);
  EXPECT_EQ(net.labels(), out);
  EXPECT_LT(relative_distance(net, ref), 1e-13);
}

TEST(Tensor, NetworkRejectsLabelUsedThreeTimes) {
  Tensor a({2}), b({2}), c({2});
  a.set_labels({1});
  b.set_labels({1});
  c.set_labels({1});
  EXPECT_THROW(contract_network({a, b, c}), Error);
  Tensor d({2, 2});
  d.set_labels({4, 4});
  EXPECT_THROW(contract_network({d}), Error);
}

TEST(Tensor, NetworkScalarResultAndOuterProduct) {
  std::mt19937_64 rng(2);
  Tensor a = random_tensor({3}, rng), b = random_tensor({3}, rng);
  a.set_labels({1});
  b.set_labels({1});
  const Tensor s = contract_network({a, b});
  cplx ref = 0.0;
  for (std::size_t i = 0; i < 3; ++i) ref += a[i] * b[i];
  EXPECT_EQ(s.rank(), 0u);
  EXPECT_NEAR(std::abs(s[0] - ref), 0.0, 1e-14);
  b.set_labels({2});
  const Tensor o = contract_network({a, b});
  EXPECT_EQ(o.size(), 9u);
}

TEST(Tensor, InnerProductAndNorm) {
  std::mt19937_64 rng(4);
  const Tensor a = random_tensor({2, 5}, rng);
  EXPECT_NEAR(std::real(inner_product(a, a)), a.squared_norm(), 1e-12);
  EXPECT_NEAR(a.norm() * a.norm(), a.squared_norm(), 1e-12);
  Tensor b = a;
  b *= cplx(0.0, 2.0);
  EXPECT_NEAR(std::abs(inner_product(a, b) - cplx(0.0, 2.0) * a.squared_norm()), 0.0, 1e-12);
}

TEST(Tensor, QrSplitIsIsometryAndReconstructs) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor t = random_tensor({3, 2, 4}, rng);
    const std::size_t left[2] = {0, 2};
    const QrResult qr = qr_split(t, left);
    ASSERT_EQ(qr.q.rank(), 3u);
    const std::size_t k = qr.q.dim(2);
    EXPECT_EQ(k, 2u);
    // Q^dagger Q = I
    const std::size_t rows = 12;
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        cplx s = 0.0;
        for (std::size_t r = 0; r < rows; ++r) s += std::conj(qr.q[r * k + x]) * qr.q[r * k + y];
        EXPECT_NEAR(std::abs(s - (x == y ? 1.0 : 0.0)), 0.0, 1e-12);
      }
    Tensor q = qr.q, r = qr.r;
    q.set_labels({10, 12, 99});
    r.set_labels({99, 11});
    Tensor back = contract_network({q, r}, std::vector<Label>{10, 11, 12});
    back.clear_labels();
    EXPECT_LT(relative_distance(back, t), 1e-12);
  }
}

TEST(Tensor, SvdSplitEckartYoung) {
  std::mt19937_64 rng(7);
  const Tensor t = random_tensor({4, 3, 5}, rng);
  const std::size_t left[1] = {1};
  const SvdResult full = svd_split(t, left, 100);
  ASSERT_EQ(full.s.size(), 3u);
  EXPECT_NEAR(full.discarded_weight, 0.0, 1e-15);
  double total = 0.0;
  for (double s : full.s) total += s * s;
  EXPECT_NEAR(total, t.squared_norm(), 1e-10);
  for (std::size_t i = 1; i < full.s.size(); ++i) EXPECT_GE(full.s[i - 1], full.s[i]);

  const SvdResult cut = svd_split(t, left, 2);
  ASSERT_EQ(cut.s.size(), 2u);
  EXPECT_NEAR(cut.discarded_weight, full.s[2] * full.s[2] / total, 1e-12);
  // ||t - U S V||^2 equals the discarded singular value squared
  Tensor us = cut.u;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 2; ++c) us[r * 2 + c] *= cut.s[c];
  us.set_labels({1, 99});
  Tensor vh = cut.vh;
  vh.set_labels({99, 0, 2});
  Tensor approx = contract_network({us, vh}, std::vector<Label>{0, 1, 2});
  approx.clear_labels();
  double err = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) err += std::norm(t[i] - approx[i]);
  EXPECT_NEAR(err, full.s[2] * full.s[2], 1e-10);
}

TEST(Tensor, SvdCutoffAndZeroTensor) {
  Tensor t({2, 2});
  t[0] = 1.0;
  t[3] = 1e-9;
  const std::size_t left[1] = {0};
  EXPECT_EQ(svd_split(t, left, 4, 1e-6).s.size(), 1u);
  EXPECT_EQ(svd_split(t, left, 4, 0.0).s.size(), 2u);
  Tensor z({2, 2});
  try {
    svd_split(z, left, 2);
    FAIL() << "expected a numerical error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Numerical);
  }
  EXPECT_THROW(svd_split(t, left, 0), Error);
}

TEST(Tensor, ComplementAxes) {
  const std::size_t ax[2] = {1, 3};
  EXPECT_EQ(complement_axes(5, ax), (std::vector<std::size_t>{0, 2, 4}));
}

}  // namespace
}  // namespace ttn
