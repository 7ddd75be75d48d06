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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "ttn/circuits.hpp"
#include "ttn/error.hpp"

namespace ttn {
namespace {

Eigen::Matrix4cd as_eigen(const Matrix4& u) {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = u[static_cast<std::size_t>(4 * r + c)];
  return m;
}

// Haar sampler via classical Gram-Schmidt on Gaussian columns; the
// resulting R has a positive diagonal, so no phase correction is needed.
Eigen::Matrix4cd gram_schmidt_haar(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Matrix4cd q;
  for (int c = 0; c < 4; ++c) {
    Eigen::Vector4cd v;
    for (int r = 0; r < 4; ++r) v(r) = {g(rng), g(rng)};
    for (int k = 0; k < c; ++k) v -= q.col(k).dot(v) * q.col(k);
    q.col(c) = v / v.norm();
  }
  return q;
}

std::vector<double> spacings(const Eigen::Matrix4cd& u) {
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(u);
  std::vector<double> ang;
  for (int k = 0; k < 4; ++k) ang.push_back(std::arg(es.eigenvalues()(k)));
  std::sort(ang.begin(), ang.end());
  std::vector<double> s;
  for (int k = 0; k < 4; ++k) {
    double d = (k + 1 < 4 ? ang[k + 1] : ang[0] + 2 * std::numbers::pi) - ang[k];
    s.push_back(d * 4 / (2 * std::numbers::pi));
  }
  return s;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

TEST(Circuits, RandomGateIsUnitary) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    auto u = as_eigen(random_two_qubit_gate(rng));
    EXPECT_LT((u.adjoint() * u - Eigen::Matrix4cd::Identity()).norm(), 1e-12);
    EXPECT_NEAR(std::abs(u.determinant()), 1.0, 1e-12);
  }
}

TEST(Circuits, RandomGateHaarSpacings) {
  std::mt19937_64 rng(2);
  std::mt19937_64 ref_rng(3);
  std::vector<double> ours, ref;
  std::vector<double> u00, ref_u00;
  double trace2 = 0.0;
  const int draws = 10000;
  for (int k = 0; k < draws; ++k) {
    auto u = as_eigen(random_two_qubit_gate(rng));
    auto s = spacings(u);
    ours.insert(ours.end(), s.begin(), s.end());
    u00.push_back(std::norm(u(0, 0)));
    trace2 += std::norm(u.trace());
    auto h = gram_schmidt_haar(ref_rng);
    auto r = spacings(h);
    ref.insert(ref.end(), r.begin(), r.end());
    ref_u00.push_back(std::norm(h(0, 0)));
  }
  EXPECT_LT(ks_distance(ours, ref), 0.02);
  EXPECT_LT(ks_distance(u00, ref_u00), 0.02);
  // E|tr U|^2 = 1 for Haar on U(d); the sample std of |tr U|^2 is 1 (exponential law)
  EXPECT_NEAR(trace2 / draws, 1.0, 5.0 / std::sqrt(draws));
}

TEST(Circuits, BrickwallCounts) {
  std::mt19937_64 rng(4);
  EXPECT_EQ(brickwall_circuit(32, 10, rng).two_qubit_count(), 310);
  EXPECT_EQ(brickwall_circuit(128, 10, rng).two_qubit_count(), 1270);
  auto c2 = brickwall_circuit(2, 1, rng);
  ASSERT_EQ(c2.gates().size(), 1u);
  EXPECT_EQ(c2.gates()[0].targets, (std::vector<int>{0, 1}));
  EXPECT_THROW(brickwall_circuit(1, 1, rng), Error);
  EXPECT_THROW(brickwall_circuit(4, 0, rng), Error);
}

TEST(Circuits, BrickwallLayout) {
  std::mt19937_64 rng(5);
  auto c = brickwall_circuit(6, 2, rng);
  std::vector<std::vector<int>> want;
  for (int d = 0; d < 2; ++d) {
    for (int q = 0; q + 1 < 6; q += 2) want.push_back({q, q + 1});
    for (int q = 1; q + 1 < 6; q += 2) want.push_back({q, q + 1});
  }
  ASSERT_EQ(c.gates().size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(c.gates()[i].targets, want[i]);
  EXPECT_EQ(c.meta().family, "brickwall");
  EXPECT_EQ(c.meta().depth, 2);
}

// Direct enumeration of the tree-like pair set for layerwise trees.
int treelike_count_oracle(const TreeTopology& t) {
  int count = 0;
  for (const auto& nd : t.nodes()) {
    const int q = static_cast<int>(nd.qubits.size());
    const int c = static_cast<int>(nd.children.size());
    count += q * (q - 1) / 2 + c * (c - 1) / 2;
  }
  return count;
}

TEST(Circuits, TreelikeCounts) {
  std::mt19937_64 rng(6);
  auto t27 = build_layerwise_regular(27, std::vector<int>{3, 3}, 3);
  auto t54 = build_layerwise_regular(54, std::vector<int>{2, 3, 3}, 3);
  auto t81 = build_layerwise_regular(81, std::vector<int>{3, 3, 3}, 3);
  EXPECT_EQ(treelike_circuit(t27, 4, rng).two_qubit_count(), 156);
  EXPECT_EQ(treelike_circuit(t54, 4, rng).two_qubit_count(), 316);
  EXPECT_EQ(treelike_circuit(t81, 4, rng).two_qubit_count(), 480);
  for (const auto* t : {&t27, &t54, &t81})
    EXPECT_EQ(static_cast<int>(treelike_pairs(*t).size()), treelike_count_oracle(*t));
  auto single = build_layerwise_regular(3, std::vector<int>{}, 3);
  EXPECT_EQ(treelike_circuit(single, 1, rng).two_qubit_count(), 3);
}

TEST(Circuits, TreelikeInterGatesUseFirstQubits) {
  auto t = build_layerwise_regular(27, std::vector<int>{3, 3}, 3);
  auto pairs = treelike_pairs(t);
  std::set<std::pair<int, int>> inter;
  for (auto [a, b] : pairs)
    if (t.node_of_qubit(a) != t.node_of_qubit(b)) inter.insert({a, b});
  // level 1: within each group of three leaves (0,3),(0,6),(3,6), ...
  // level 0: between first qubits of the three subtrees (0,9),(0,18),(9,18)
  std::set<std::pair<int, int>> want;
  for (int g = 0; g < 3; ++g) {
    const int b = 9 * g;
    want.insert({b, b + 3});
    want.insert({b, b + 6});
    want.insert({b + 3, b + 6});
  }
  want.insert({0, 9});
  want.insert({0, 18});
  want.insert({9, 18});
  EXPECT_EQ(inter, want);
}

TEST(Circuits, TreelikeRandomInter) {
  std::mt19937_64 rng(7);
  auto t81 = build_layerwise_regular(81, std::vector<int>{3, 3, 3}, 3);
  EXPECT_EQ(treelike_random_inter(t81, 0, 4, rng).two_qubit_count(), 324);
  EXPECT_EQ(treelike_random_inter(t81, 20, 4, rng).two_qubit_count(), 344);
  EXPECT_THROW(treelike_random_inter(t81, -1, 4, rng), Error);

  auto ones = build_layerwise_regular(4, std::vector<int>{4}, 1);
  auto c = treelike_random_inter(ones, 12, 1, rng);
  EXPECT_EQ(c.two_qubit_count(), 12);
  for (const auto& g : c.gates()) EXPECT_NE(ones.node_of_qubit(g.targets[0]), ones.node_of_qubit(g.targets[1]));
}

TEST(Circuits, TreelikeRandomInterUniform) {
  auto t = build_layerwise_regular(9, std::vector<int>{3}, 3);
  std::mt19937_64 rng(8);
  const int draws = 10000;
  auto c = treelike_random_inter(t, draws, 1, rng);
  std::map<std::pair<int, int>, int> hist;
  int inter = 0;
  for (const auto& g : c.gates()) {
    const int a = g.targets[0], b = g.targets[1];
    if (t.node_of_qubit(a) == t.node_of_qubit(b)) continue;
    ++inter;
    ++hist[{std::min(a, b), std::max(a, b)}];
  }
  EXPECT_EQ(inter, draws);
  ASSERT_EQ(hist.size(), 27u);
  const double p = 1.0 / 27.0;
  const double mean = draws * p, sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& [pair, n] : hist) EXPECT_LE(std::abs(n - mean), 5 * sigma);
}

TEST(Circuits, QaoaStructure) {
  std::mt19937_64 rng(9);
  auto g = random_3_regular(64, rng);
  auto params = sample_qaoa_params(1, rng);
  auto c = qaoa_maxcut_circuit(g, params.betas, params.gammas);
  EXPECT_EQ(c.two_qubit_count(), 96);
  EXPECT_EQ(c.gates().size(), 64u + 96u + 64u);
  for (int q = 0; q < 64; ++q) EXPECT_EQ(c.gates()[static_cast<std::size_t>(q)].kind, GateKind::H);
  for (std::size_t k = 0; k < 96; ++k) {
    const auto& gate = c.gates()[64 + k];
    EXPECT_EQ(gate.kind, GateKind::ZZ);
    EXPECT_EQ(gate.targets, (std::vector<int>{g.edges()[k].u, g.edges()[k].v}));
    EXPECT_EQ(gate.param, params.gammas[0]);
  }
  EXPECT_EQ(c.gates().back().kind, GateKind::RX);

  auto t27 = build_layerwise_regular(27, std::vector<int>{3, 3}, 3);
  auto p4 = sample_qaoa_params(4, rng);
  EXPECT_EQ(qaoa_maxcut_circuit(treelike_graph(t27), p4.betas, p4.gammas).two_qubit_count(), 156);
  EXPECT_THROW(qaoa_maxcut_circuit(g, {0.1}, {}), Error);
  EXPECT_THROW(qaoa_maxcut_circuit(Graph(3), {0.1}, {0.2}), Error);
}

TEST(Circuits, QaoaZeroAnglesGiveUniformState) {
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto c = qaoa_maxcut_circuit(k4, {0.0}, {0.0});
  testing::cvec psi(16, 0.0);
  psi[0] = 1.0;
  psi = testing::apply_matrix(testing::circuit_matrix(c), psi);
  for (auto a : psi) EXPECT_NEAR(std::abs(a - cplx(0.25)), 0.0, 1e-12);
}

TEST(Circuits, GateMatrices) {
  const cplx i{0.0, 1.0};
  auto zz = Gate::zz(0, 1, 0.7).matrix();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (r != c) {
        EXPECT_EQ(zz[static_cast<std::size_t>(4 * r + c)], cplx(0.0));
        continue;
      }
      const double z = ((r >> 1) & 1 ? -1.0 : 1.0) * ((r & 1) ? -1.0 : 1.0);
      EXPECT_LT(std::abs(zz[static_cast<std::size_t>(5 * r)] - std::exp(-i * 0.35 * z)), 1e-15);
    }
  auto rx = Gate::rx(0, 0.9).matrix();
  // exp(-i b/2 X) via series-free closed form check against Eigen's matrix exponential surrogate
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(x);
  Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
  for (int k = 0; k < 2; ++k) d(k, k) = std::exp(-i * 0.45 * es.eigenvalues()(k));
  Eigen::Matrix2cd ref = es.eigenvectors() * d * es.eigenvectors().inverse();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) EXPECT_LT(std::abs(rx[static_cast<std::size_t>(2 * r + c)] - ref(r, c)), 1e-14);
  for (auto k : {GateKind::H, GateKind::RX, GateKind::ZZ, GateKind::U1, GateKind::U2})
    EXPECT_EQ(gate_kind_from_name(gate_kind_name(k)), k);
  EXPECT_THROW(gate_kind_from_name("cnot"), Error);
}

TEST(Circuits, AddValidates) {
  Circuit c(3);
  EXPECT_THROW(c.add(Gate::h(3)), Error);
  EXPECT_THROW(c.add(Gate::zz(1, 1, 0.1)), Error);
  Matrix2 bad{1.0, 1.0, 0.0, 1.0};
  EXPECT_THROW(c.add(Gate::unitary(0, bad)), Error);
  c.add(Gate::zz(0, 2, 0.3));
  EXPECT_EQ(c.two_qubit_count(), 1);
}

TEST(Circuits, QaoaParamBounds) {
  std::mt19937_64 rng(10);
  double sum_g = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    auto p = sample_qaoa_params(1, rng);
    ASSERT_GE(p.betas[0], 0.0);
    ASSERT_LT(p.betas[0], std::numbers::pi);
    ASSERT_GE(p.gammas[0], 0.0);
    ASSERT_LT(p.gammas[0], 2 * std::numbers::pi);
    sum_g += p.gammas[0];
  }
  const double sigma = 2 * std::numbers::pi / std::sqrt(12.0) / std::sqrt(n);
  EXPECT_NEAR(sum_g / n, std::numbers::pi, 3 * sigma);
  EXPECT_THROW(sample_qaoa_params(0, rng), Error);
}

TEST(Circuits, SeededDeterminism) {
  std::mt19937_64 a(11), b(11);
  EXPECT_EQ(brickwall_circuit(8, 3, a), brickwall_circuit(8, 3, b));
}

}  // namespace
}  // namespace ttn
