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

#include "ttn/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "ttn/error.hpp"

namespace ttn {
namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidArgument && e.kind() != ErrorKind::Config) throw;
    fail(ErrorKind::Config, std::string(what) + ": " + e.what());
  } catch (const std::exception& e) {
    fail(ErrorKind::Config, std::string(what) + ": " + e.what());
  }
}

Json complex_array(std::span<const cplx> v) {
  Json a = Json::array();
  for (const auto& x : v) {
    a.push_back(x.real());
    a.push_back(x.imag());
  }
  return a;
}

std::vector<cplx> complex_from(const Json& a) {
  if (!a.is_array() || a.size() % 2 != 0) fail(ErrorKind::Config, "complex data must be an array of (re, im) pairs");
  std::vector<cplx> out(a.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {a[2 * i].get<double>(), a[2 * i + 1].get<double>()};
  return out;
}

}  // namespace

Json tensor_to_json(const Tensor& t) { return Json{{"shape", t.shape()}, {"data", complex_array(t.data())}}; }

Tensor tensor_from_json(const Json& j) {
  return guarded("tensor", [&] {
    auto shape = j.at("shape").get<std::vector<std::size_t>>();
    return Tensor(std::move(shape), complex_from(j.at("data")));
  });
}

Json topology_to_json(const TreeTopology& t) {
  Json nodes = Json::array();
  for (const auto& nd : t.nodes()) {
    Json n{{"id", nd.id}, {"children", nd.children}, {"qubits", nd.qubits}};
    n["parent"] = nd.parent < 0 ? Json(nullptr) : Json(nd.parent);
    nodes.push_back(std::move(n));
  }
  return Json{{"n_qubits", t.num_qubits()}, {"nodes", std::move(nodes)}};
}

TreeTopology topology_from_json(const Json& j) {
  return guarded("topology", [&] {
    std::vector<TreeNode> nodes;
    for (const auto& n : j.at("nodes")) {
      TreeNode nd;
      nd.id = n.at("id").get<int>();
      const auto& p = n.at("parent");
      nd.parent = p.is_null() ? -1 : p.get<int>();
      nd.children = n.at("children").get<std::vector<int>>();
      nd.qubits = n.at("qubits").get<std::vector<int>>();
      nodes.push_back(std::move(nd));
    }
    std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return TreeTopology(j.at("n_qubits").get<int>(), std::move(nodes));
  });
}

Json state_to_json(const TTNState& s) {
  Json ts = Json::array();
  for (const auto& t : s.tensors()) ts.push_back(tensor_to_json(t));
  Json j{{"topology", topology_to_json(s.topology())}, {"tensors", std::move(ts)}};
  j["center"] = s.center() ? Json(*s.center()) : Json(nullptr);
  return j;
}

TTNState state_from_json(const Json& j) {
  return guarded("state", [&] {
    auto topo = std::make_shared<const TreeTopology>(topology_from_json(j.at("topology")));
    std::vector<Tensor> ts;
    for (const auto& t : j.at("tensors")) ts.push_back(tensor_from_json(t));
    std::optional<int> center;
    if (j.contains("center") && !j.at("center").is_null()) center = j.at("center").get<int>();
    return TTNState(std::move(topo), std::move(ts), center);
  });
}

Json circuit_to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates()) {
    Json jg{{"kind", gate_kind_name(g.kind)}, {"targets", g.targets}};
    if (g.kind == GateKind::RX || g.kind == GateKind::ZZ) jg["params"] = Json::array({g.param});
    if (g.kind == GateKind::U1 || g.kind == GateKind::U2) jg["matrix"] = complex_array(g.raw);
    gates.push_back(std::move(jg));
  }
  const auto& m = c.meta();
  Json meta{{"family", m.family}, {"depth", m.depth}, {"seed", m.seed}, {"rng", m.rng}, {"graph", m.graph}};
  return Json{{"n", c.num_qubits()}, {"gates", std::move(gates)}, {"meta", std::move(meta)}};
}

Circuit circuit_from_json(const Json& j) {
  return guarded("circuit", [&] {
    Circuit c(j.at("n").get<int>());
    for (const auto& jg : j.at("gates")) {
      Gate g;
      g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
      g.targets = jg.at("targets").get<std::vector<int>>();
      if (g.kind == GateKind::RX || g.kind == GateKind::ZZ) {
        const auto& p = jg.at("params");
        require(p.is_array() && p.size() == 1, "RX and ZZ gates take exactly one parameter");
        g.param = p[0].get<double>();
      }
      if (g.kind == GateKind::U1 || g.kind == GateKind::U2) {
        g.raw = complex_from(jg.at("matrix"));
        const std::size_t expect = g.kind == GateKind::U1 ? 4 : 16;
        require(g.raw.size() == expect, "explicit gate matrix has the wrong size");
      }
      c.add(std::move(g));
    }
    if (j.contains("meta")) {
      const auto& m = j.at("meta");
      auto& meta = c.meta();
      meta.family = m.value("family", std::string{});
      meta.depth = m.value("depth", 0);
      meta.seed = m.value("seed", std::uint64_t{0});
      meta.rng = m.value("rng", std::string{"mt19937_64"});
      meta.graph = m.value("graph", std::string{});
    }
    return c;
  });
}

Json report_to_json(const CompressionReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back(Json{{"step", s.step},
                         {"gate_ids", s.gate_ids},
                         {"f", s.fidelity},
                         {"F_tilde", s.cumulative},
                         {"epsilon", s.epsilon},
                         {"M", s.memory},
                         {"sweeps", s.sweeps},
                         {"elapsed_ms", s.elapsed_ms}});
  }
  return Json{{"method", r.method},      {"N_2g", r.two_qubit_gates}, {"F_tilde", r.fidelity},
              {"epsilon", r.epsilon},    {"M", r.memory},             {"peak_M", r.peak_memory},
              {"wall_ms", r.wall_ms},    {"steps", std::move(steps)}};
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os.precision(17);
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return os.str();
}

Graph graph_from_text(const std::string& text) {
  return guarded("graph", [&] {
    std::istringstream is(text);
    long long n = 0, m = 0;
    if (!(is >> n >> m) || n < 1 || m < 0) fail(ErrorKind::Config, "expected a header line 'N M'");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
      long long u = 0, v = 0;
      double w = 0.0;
      if (!(is >> u >> v >> w)) fail(ErrorKind::Config, "expected " + std::to_string(m) + " edge lines 'u v w'");
      require(u >= 0 && v >= 0 && u < n && v < n, "edge endpoint out of range");
      g.add_edge(static_cast<int>(u), static_cast<int>(v), w);
    }
    std::string rest;
    if (is >> rest) fail(ErrorKind::Config, "trailing data after the declared edges");
    return g;
  });
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorKind::Io, "write failed for " + path);
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  return guarded(path.c_str(), [&] { return Json::parse(text); });
}

void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

}  // namespace ttn
