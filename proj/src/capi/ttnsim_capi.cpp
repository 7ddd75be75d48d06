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

#include "ttnsim/ttnsim.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <random>
#include <string>

#include "ttn/compression.hpp"
#include "ttn/error.hpp"
#include "ttn/harness.hpp"
#include "ttn/oracle.hpp"
#include "ttn/serialization.hpp"
#include "ttn/svd_baseline.hpp"

struct ttn_graph {
  ttn::Graph g;
};
struct ttn_topology {
  ttn::TopologyPtr t;
};
struct ttn_circuit {
  ttn::Circuit c;
};
struct ttn_state {
  ttn::TTNState s;
};
struct ttn_report {
  ttn::CompressionReport r;
};

namespace {

thread_local std::string g_last_error;

ttn_status status_of(ttn::ErrorKind k) {
  switch (k) {
    case ttn::ErrorKind::InvalidArgument:
      return TTN_ERR_INVALID_ARGUMENT;
    case ttn::ErrorKind::Numerical:
      return TTN_ERR_NUMERICAL;
    case ttn::ErrorKind::Config:
      return TTN_ERR_CONFIG;
    case ttn::ErrorKind::Io:
      return TTN_ERR_IO;
  }
  return TTN_ERR_INTERNAL;
}

template <class F>
ttn_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return TTN_OK;
  } catch (const ttn::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TTN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TTN_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TTN_ERR_INTERNAL;
  }
}

template <class T>
void need(const T* p, const char* what) {
  if (p == nullptr) ttn::fail(ttn::ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::span<const int> int_span(const int* p, std::size_t n) {
  if (n > 0) need(p, "branching");
  return {p, n};
}

}  // namespace

extern "C" {

const char* ttn_version(void) { return "0.1.0"; }
const char* ttn_last_error(void) { return g_last_error.c_str(); }

const char* ttn_status_name(ttn_status s) {
  switch (s) {
    case TTN_OK:
      return "ok";
    case TTN_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TTN_ERR_NUMERICAL:
      return "numerical failure";
    case TTN_ERR_CONFIG:
      return "configuration error";
    case TTN_ERR_IO:
      return "i/o error";
    case TTN_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void ttn_string_free(char* s) { std::free(s); }
void ttn_buffer_free(double* p) { std::free(p); }

ttn_status ttn_graph_random_3_regular(int n, uint64_t seed, ttn_graph** out) {
  return guard([&] {
    need(out, "out");
    std::mt19937_64 rng(seed);
    *out = new ttn_graph{ttn::random_3_regular(n, rng)};
  });
}

ttn_status ttn_graph_bridged_3_regular(int n_clusters, ttn_graph** out) {
  return guard([&] {
    need(out, "out");
    *out = new ttn_graph{ttn::bridged_3_regular(n_clusters)};
  });
}

ttn_status ttn_graph_treelike(const ttn_topology* t, ttn_graph** out) {
  return guard([&] {
    need(t, "topology");
    need(out, "out");
    *out = new ttn_graph{ttn::treelike_graph(*t->t)};
  });
}

ttn_status ttn_graph_from_text(const char* text, ttn_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new ttn_graph{ttn::graph_from_text(text)};
  });
}

ttn_status ttn_graph_to_text(const ttn_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(ttn::graph_to_text(g->g));
  });
}

ttn_status ttn_graph_size(const ttn_graph* g, int* vertices, int* edges) {
  return guard([&] {
    need(g, "graph");
    if (vertices) *vertices = g->g.num_vertices();
    if (edges) *edges = g->g.num_edges();
  });
}

void ttn_graph_free(ttn_graph* g) { delete g; }

ttn_status ttn_topology_layerwise(int n, const int* branching, size_t levels, int qubits_per_leaf,
                                  ttn_topology** out) {
  return guard([&] {
    need(out, "out");
    auto t = ttn::build_layerwise_regular(n, int_span(branching, levels), qubits_per_leaf);
    *out = new ttn_topology{std::make_shared<const ttn::TreeTopology>(std::move(t))};
  });
}

ttn_status ttn_topology_path(int n, int qubits_per_node, ttn_topology** out) {
  return guard([&] {
    need(out, "out");
    *out = new ttn_topology{std::make_shared<const ttn::TreeTopology>(ttn::build_path_topology(n, qubits_per_node))};
  });
}

ttn_status ttn_topology_naive(const ttn_graph* g, const int* branching, size_t levels, int leaf_capacity,
                              ttn_topology** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    const auto cl = ttn::cluster_graph(g->g);
    const auto ord = ttn::reorder_for_tree(g->g, cl, leaf_capacity);
    auto t = ttn::build_from_clusters(g->g.num_vertices(), ord.leaves, int_span(branching, levels));
    *out = new ttn_topology{std::make_shared<const ttn::TreeTopology>(std::move(t))};
  });
}

ttn_status ttn_topology_from_json(const char* json, ttn_topology** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    auto j = ttn::Json::parse(json, nullptr, false);
    if (j.is_discarded()) ttn::fail(ttn::ErrorKind::Config, "topology: malformed JSON");
    *out = new ttn_topology{std::make_shared<const ttn::TreeTopology>(ttn::topology_from_json(j))};
  });
}

ttn_status ttn_topology_to_json(const ttn_topology* t, char** out) {
  return guard([&] {
    need(t, "topology");
    need(out, "out");
    *out = dup_string(ttn::topology_to_json(*t->t).dump(2));
  });
}

ttn_status ttn_topology_size(const ttn_topology* t, int* qubits, int* nodes) {
  return guard([&] {
    need(t, "topology");
    if (qubits) *qubits = t->t->num_qubits();
    if (nodes) *nodes = t->t->num_nodes();
  });
}

void ttn_topology_free(ttn_topology* t) { delete t; }

ttn_status ttn_circuit_brickwall(int n, int depth, uint64_t seed, ttn_circuit** out) {
  return guard([&] {
    need(out, "out");
    std::mt19937_64 rng(seed);
    ttn::Circuit c = ttn::brickwall_circuit(n, depth, rng);
    c.meta().seed = seed;
    *out = new ttn_circuit{std::move(c)};
  });
}

ttn_status ttn_circuit_treelike(const ttn_topology* t, int depths, int n_inter, uint64_t seed, ttn_circuit** out) {
  return guard([&] {
    need(t, "topology");
    need(out, "out");
    std::mt19937_64 rng(seed);
    ttn::Circuit c = n_inter < 0 ? ttn::treelike_circuit(*t->t, depths, rng)
                                 : ttn::treelike_random_inter(*t->t, n_inter, depths, rng);
    c.meta().seed = seed;
    *out = new ttn_circuit{std::move(c)};
  });
}

ttn_status ttn_circuit_qaoa(const ttn_graph* g, int p, uint64_t seed, ttn_circuit** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    std::mt19937_64 rng(seed);
    const auto params = ttn::sample_qaoa_params(p, rng);
    ttn::Circuit c = ttn::qaoa_maxcut_circuit(g->g, params.betas, params.gammas);
    c.meta().seed = seed;
    *out = new ttn_circuit{std::move(c)};
  });
}

ttn_status ttn_circuit_from_json(const char* json, ttn_circuit** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    auto j = ttn::Json::parse(json, nullptr, false);
    if (j.is_discarded()) ttn::fail(ttn::ErrorKind::Config, "circuit: malformed JSON");
    *out = new ttn_circuit{ttn::circuit_from_json(j)};
  });
}

ttn_status ttn_circuit_to_json(const ttn_circuit* c, char** out) {
  return guard([&] {
    need(c, "circuit");
    need(out, "out");
    *out = dup_string(ttn::circuit_to_json(c->c).dump(2));
  });
}

ttn_status ttn_circuit_size(const ttn_circuit* c, int* qubits, int* gates, int* two_qubit_gates) {
  return guard([&] {
    need(c, "circuit");
    if (qubits) *qubits = c->c.num_qubits();
    if (gates) *gates = static_cast<int>(c->c.gates().size());
    if (two_qubit_gates) *two_qubit_gates = c->c.two_qubit_count();
  });
}

void ttn_circuit_free(ttn_circuit* c) { delete c; }

ttn_status ttn_state_zero(const ttn_topology* t, ttn_state** out) {
  return guard([&] {
    need(t, "topology");
    need(out, "out");
    ttn::Bitstring bits(static_cast<std::size_t>(t->t->num_qubits()), 0);
    *out = new ttn_state{ttn::TTNState::product_state(t->t, bits)};
  });
}

ttn_status ttn_state_from_json(const char* json, ttn_state** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    auto j = ttn::Json::parse(json, nullptr, false);
    if (j.is_discarded()) ttn::fail(ttn::ErrorKind::Config, "state: malformed JSON");
    *out = new ttn_state{ttn::state_from_json(j)};
  });
}

ttn_status ttn_state_to_json(const ttn_state* s, char** out) {
  return guard([&] {
    need(s, "state");
    need(out, "out");
    *out = dup_string(ttn::state_to_json(s->s).dump());
  });
}

ttn_status ttn_state_memory(const ttn_state* s, uint64_t* out) {
  return guard([&] {
    need(s, "state");
    need(out, "out");
    *out = ttn::memory_footprint(s->s);
  });
}

ttn_status ttn_state_norm(const ttn_state* s, double* out) {
  return guard([&] {
    need(s, "state");
    need(out, "out");
    *out = ttn::norm(s->s);
  });
}

void ttn_state_free(ttn_state* s) { delete s; }

void ttn_sim_options_default(ttn_sim_options* o) {
  if (o == nullptr) return;
  const ttn::SweepConfig sc;
  o->max_sweeps = sc.max_sweeps;
  o->threshold = sc.threshold;
  o->gates_per_step = 1;
  o->layer = 0;
  o->svd_cutoff = 0.0;
}

ttn_status ttn_simulate(const ttn_state* init, const ttn_circuit* c, const char* method, size_t chi,
                        const ttn_sim_options* opts, ttn_state** out_state, ttn_report** out_report) {
  return guard([&] {
    need(init, "state");
    need(c, "circuit");
    need(method, "method");
    ttn_sim_options o;
    ttn_sim_options_default(&o);
    if (opts) o = *opts;
    if (chi < 1) ttn::fail(ttn::ErrorKind::InvalidArgument, "chi must be at least 1");
    const ttn::BondSpec caps = ttn::BondSpec::uniform(init->s.topology(), chi);
    const std::string m(method);
    std::pair<ttn::TTNState, ttn::CompressionReport> run = [&] {
      if (m == "svd") return ttn::run_circuit_svd(init->s, c->c, caps, o.svd_cutoff);
      if (m != "dmrg") ttn::fail(ttn::ErrorKind::InvalidArgument, "method must be dmrg or svd");
      ttn::SweepConfig sc;
      sc.max_sweeps = o.max_sweeps;
      sc.threshold = o.threshold;
      sc.caps = caps;
      ttn::BatchPolicy bp;
      bp.gates_per_step = o.gates_per_step;
      bp.layer = o.layer != 0;
      return ttn::run_circuit(init->s, c->c, sc, bp);
    }();
    if (out_state) *out_state = new ttn_state{std::move(run.first)};
    if (out_report) *out_report = new ttn_report{std::move(run.second)};
  });
}

ttn_status ttn_report_summary(const ttn_report* r, double* f_tilde, double* epsilon, int* two_qubit_gates,
                              uint64_t* memory) {
  return guard([&] {
    need(r, "report");
    if (f_tilde) *f_tilde = r->r.fidelity;
    if (epsilon) *epsilon = r->r.epsilon;
    if (two_qubit_gates) *two_qubit_gates = r->r.two_qubit_gates;
    if (memory) *memory = r->r.memory;
  });
}

ttn_status ttn_report_to_json(const ttn_report* r, char** out) {
  return guard([&] {
    need(r, "report");
    need(out, "out");
    *out = dup_string(ttn::report_to_json(r->r).dump(2));
  });
}

void ttn_report_free(ttn_report* r) { delete r; }

ttn_status ttn_exact_statevector(const ttn_circuit* c, double** interleaved, size_t* amplitudes) {
  return guard([&] {
    need(c, "circuit");
    need(interleaved, "interleaved");
    need(amplitudes, "amplitudes");
    const auto psi = ttn::exact_simulate(c->c);
    double* buf = static_cast<double*>(std::malloc(2 * psi.size() * sizeof(double)));
    if (buf == nullptr) throw std::bad_alloc();
    for (std::size_t i = 0; i < psi.size(); ++i) {
      buf[2 * i] = psi[i].real();
      buf[2 * i + 1] = psi[i].imag();
    }
    *interleaved = buf;
    *amplitudes = psi.size();
  });
}

ttn_status ttn_exact_fidelity(const ttn_state* s, const ttn_circuit* c, double* out) {
  return guard([&] {
    need(s, "state");
    need(c, "circuit");
    need(out, "out");
    *out = ttn::exact_fidelity(s->s, c->c);
  });
}

ttn_status ttn_experiment_run(const char* config_json, const char* output_dir, int threads, ttn_progress_fn progress,
                              void* user) {
  return guard([&] {
    need(config_json, "config");
    auto j = ttn::Json::parse(config_json, nullptr, false);
    if (j.is_discarded()) ttn::fail(ttn::ErrorKind::Config, "config: malformed JSON");
    auto cfg = ttn::ExperimentConfig::from_json(j);
    if (output_dir) cfg.output = output_dir;
    if (threads > 0) cfg.threads = threads;
    ttn::ProgressFn fn;
    if (progress)
      fn = [progress, user](int i, std::size_t chi, const std::string& m) { progress(i, chi, m.c_str(), user); };
    const auto res = ttn::run_experiment(cfg, fn);
    ttn::write_outputs(cfg, res, cfg.output);
  });
}

ttn_status ttn_results_report(const char* results_csv, char** out_csv) {
  return guard([&] {
    need(results_csv, "results");
    need(out_csv, "out");
    *out_csv = dup_string(ttn::report_csv(ttn::parse_results_csv(results_csv)));
  });
}

ttn_status ttn_results_compare(const char* results_csv, const char* oracle_csv, char** out_csv) {
  return guard([&] {
    need(results_csv, "results");
    need(oracle_csv, "oracle");
    need(out_csv, "out");
    *out_csv = dup_string(ttn::compare_csv(ttn::parse_results_csv(results_csv), ttn::parse_oracle_csv(oracle_csv)));
  });
}

}  // extern "C"
