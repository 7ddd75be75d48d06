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

// Command-line front end over the ttnsim C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ttnsim/ttnsim.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitInternal = 1;

struct Failure {
  int code;
  std::string message;
};

int exit_code(ttn_status s) {
  switch (s) {
    case TTN_OK:
      return 0;
    case TTN_ERR_NUMERICAL:
      return kExitNumerical;
    case TTN_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitConfig;
  }
}

void check(ttn_status s, const std::string& context) {
  if (s != TTN_OK) throw Failure{exit_code(s), context + ": " + ttn_last_error()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitConfig, "cannot open " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitConfig, "cannot write " + path};
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string take(char* s) {
  std::string out(s ? s : "");
  ttn_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Graph = Handle<ttn_graph, ttn_graph_free>;
using Topology = Handle<ttn_topology, ttn_topology_free>;
using Circuit = Handle<ttn_circuit, ttn_circuit_free>;
using State = Handle<ttn_state, ttn_state_free>;
using Report = Handle<ttn_report, ttn_report_free>;

void load_graph(const std::string& path, Graph& g) {
  check(ttn_graph_from_text(slurp(path).c_str(), g.out()), "reading graph " + path);
}
void load_topology(const std::string& path, Topology& t) {
  check(ttn_topology_from_json(slurp(path).c_str(), t.out()), "reading topology " + path);
}
void load_circuit(const std::string& path, Circuit& c) {
  check(ttn_circuit_from_json(slurp(path).c_str(), c.out()), "reading circuit " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree tensor network quantum circuit simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ttn_version()));

  // gen-graph
  auto* gg = app.add_subcommand("gen-graph", "Generate a graph as an edge list");
  std::string gg_kind = "random3", gg_tree, gg_out;
  int gg_n = 16;
  std::uint64_t gg_seed = 0;
  gg->add_option("--kind", gg_kind, "random3 | bridged | treelike")
      ->check(CLI::IsMember({"random3", "bridged", "treelike"}));
  gg->add_option("-n,--n", gg_n, "Vertex count (random3, bridged)");
  gg->add_option("--seed", gg_seed, "RNG seed (random3)");
  gg->add_option("--tree", gg_tree, "Topology JSON (treelike)");
  gg->add_option("-o,--out", gg_out, "Output file (default stdout)");

  // build-tree
  auto* bt = app.add_subcommand("build-tree", "Build a tree topology");
  std::string bt_kind = "layerwise", bt_graph, bt_out;
  int bt_n = 0, bt_qpl = 1;
  std::vector<int> bt_branching;
  bt->add_option("--kind", bt_kind, "layerwise | path | naive")->check(CLI::IsMember({"layerwise", "path", "naive"}));
  bt->add_option("-n,--n", bt_n, "Qubit count (derived from the graph for naive)");
  bt->add_option("--branching", bt_branching, "Children per level, root first")->delimiter(',');
  bt->add_option("--qubits-per-leaf", bt_qpl, "Qubits per leaf (leaf capacity for naive)");
  bt->add_option("--graph", bt_graph, "Edge list driving the naive ordering");
  bt->add_option("-o,--out", bt_out, "Output file (default stdout)");

  // gen-circuit
  auto* gc = app.add_subcommand("gen-circuit", "Generate a circuit");
  std::string gc_family = "brickwall", gc_tree, gc_graph, gc_out;
  int gc_n = 16, gc_depth = 1, gc_inter = -1;
  std::uint64_t gc_seed = 0;
  gc->add_option("--family", gc_family, "brickwall | treelike | qaoa")
      ->check(CLI::IsMember({"brickwall", "treelike", "qaoa"}));
  gc->add_option("-n,--n", gc_n, "Qubit count (brickwall)");
  gc->add_option("--depth", gc_depth, "Brick-wall depth, tree-like depths, or QAOA p");
  gc->add_option("--n-inter", gc_inter, "Random inter-cluster gate count (tree-like; default fixed layout)");
  gc->add_option("--seed", gc_seed, "RNG seed");
  gc->add_option("--tree", gc_tree, "Topology JSON (treelike)");
  gc->add_option("--graph", gc_graph, "Edge list (qaoa)");
  gc->add_option("-o,--out", gc_out, "Output file (default stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run an experiment config, or one circuit on one tree");
  std::string sim_config, sim_outdir, sim_circuit, sim_tree, sim_method = "dmrg", sim_state_out, sim_report;
  int sim_threads = 0;
  std::size_t sim_chi = 16;
  ttn_sim_options sim_opts;
  ttn_sim_options_default(&sim_opts);
  bool sim_quiet = false;
  sim->add_option("--config", sim_config, "Experiment config JSON");
  sim->add_option("--out-dir", sim_outdir, "Override the config's output directory");
  sim->add_option("--threads", sim_threads, "Override the config's worker count");
  sim->add_option("--circuit", sim_circuit, "Circuit JSON (single run)");
  sim->add_option("--tree", sim_tree, "Topology JSON (single run)");
  sim->add_option("--chi", sim_chi, "Bond dimension cap (single run)");
  sim->add_option("--method", sim_method, "dmrg | svd (single run)")->check(CLI::IsMember({"dmrg", "svd"}));
  sim->add_option("--sweeps", sim_opts.max_sweeps, "Maximum sweeps per compression step");
  sim->add_option("--gates-per-step", sim_opts.gates_per_step, "Two-qubit gates per compression step");
  sim->add_option("--svd-cutoff", sim_opts.svd_cutoff, "Relative singular value cutoff (svd)");
  sim->add_option("--state-out", sim_state_out, "Write the final state JSON here (single run)");
  sim->add_option("--report", sim_report, "Write the report JSON here (single run; default stdout)");
  sim->add_flag("-q,--quiet", sim_quiet, "No progress output");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Dense reference: statevector or exact fidelity of a state");
  std::string orc_circuit, orc_state, orc_out;
  orc->add_option("--circuit", orc_circuit, "Circuit JSON")->required();
  orc->add_option("--state", orc_state, "State JSON; prints its exact fidelity");
  orc->add_option("-o,--out", orc_out, "Output file (default stdout)");

  // compare
  auto* cmp = app.add_subcommand("compare", "Join results.csv and oracle.csv per (instance, chi)");
  std::string cmp_results, cmp_oracle, cmp_out;
  cmp->add_option("--results", cmp_results, "results.csv")->required();
  cmp->add_option("--oracle", cmp_oracle, "oracle.csv")->required();
  cmp->add_option("-o,--out", cmp_out, "Output file (default stdout)");

  // report
  auto* rep = app.add_subcommand("report", "Aggregate epsilon and F_tilde per chi and method");
  std::string rep_results, rep_out;
  rep->add_option("--results", rep_results, "results.csv")->required();
  rep->add_option("-o,--out", rep_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (gg->parsed()) {
      Graph g;
      if (gg_kind == "random3") {
        check(ttn_graph_random_3_regular(gg_n, gg_seed, g.out()), "gen-graph");
      } else if (gg_kind == "bridged") {
        if (gg_n % 4 != 0) throw Failure{kExitConfig, "gen-graph: bridged graphs need n divisible by 4"};
        check(ttn_graph_bridged_3_regular(gg_n / 4, g.out()), "gen-graph");
      } else {
        if (gg_tree.empty()) throw Failure{kExitConfig, "gen-graph: treelike needs --tree"};
        Topology t;
        load_topology(gg_tree, t);
        check(ttn_graph_treelike(t.get(), g.out()), "gen-graph");
      }
      char* text = nullptr;
      check(ttn_graph_to_text(g.get(), &text), "gen-graph");
      emit(gg_out, take(text));
    } else if (bt->parsed()) {
      Topology t;
      if (bt_kind == "path") {
        check(ttn_topology_path(bt_n, bt_qpl, t.out()), "build-tree");
      } else if (bt_kind == "layerwise") {
        check(ttn_topology_layerwise(bt_n, bt_branching.data(), bt_branching.size(), bt_qpl, t.out()), "build-tree");
      } else {
        if (bt_graph.empty()) throw Failure{kExitConfig, "build-tree: naive needs --graph"};
        Graph g;
        load_graph(bt_graph, g);
        check(ttn_topology_naive(g.get(), bt_branching.data(), bt_branching.size(), bt_qpl, t.out()), "build-tree");
      }
      char* text = nullptr;
      check(ttn_topology_to_json(t.get(), &text), "build-tree");
      emit(bt_out, take(text));
    } else if (gc->parsed()) {
      Circuit c;
      if (gc_family == "brickwall") {
        check(ttn_circuit_brickwall(gc_n, gc_depth, gc_seed, c.out()), "gen-circuit");
      } else if (gc_family == "treelike") {
        if (gc_tree.empty()) throw Failure{kExitConfig, "gen-circuit: treelike needs --tree"};
        Topology t;
        load_topology(gc_tree, t);
        check(ttn_circuit_treelike(t.get(), gc_depth, gc_inter, gc_seed, c.out()), "gen-circuit");
      } else {
        if (gc_graph.empty()) throw Failure{kExitConfig, "gen-circuit: qaoa needs --graph"};
        Graph g;
        load_graph(gc_graph, g);
        check(ttn_circuit_qaoa(g.get(), gc_depth, gc_seed, c.out()), "gen-circuit");
      }
      char* text = nullptr;
      check(ttn_circuit_to_json(c.get(), &text), "gen-circuit");
      emit(gc_out, take(text));
    } else if (sim->parsed()) {
      if (!sim_config.empty()) {
        if (!sim_circuit.empty() || !sim_tree.empty())
          throw Failure{kExitConfig, "simulate: use either --config or --circuit/--tree"};
        auto progress = [](int instance, std::size_t chi, const char* method, void* user) {
          if (*static_cast<bool*>(user)) return;
          std::fprintf(stderr, "instance %d chi %zu %s done\n", instance, chi, method);
        };
        check(ttn_experiment_run(slurp(sim_config).c_str(), sim_outdir.empty() ? nullptr : sim_outdir.c_str(),
                                 sim_threads, progress, &sim_quiet),
              "simulate");
      } else {
        if (sim_circuit.empty() || sim_tree.empty())
          throw Failure{kExitConfig, "simulate: give --config, or both --circuit and --tree"};
        Circuit c;
        load_circuit(sim_circuit, c);
        Topology t;
        load_topology(sim_tree, t);
        State init, out;
        Report r;
        check(ttn_state_zero(t.get(), init.out()), "simulate");
        check(ttn_simulate(init.get(), c.get(), sim_method.c_str(), sim_chi, &sim_opts, out.out(), r.out()),
              "simulate");
        char* text = nullptr;
        check(ttn_report_to_json(r.get(), &text), "simulate");
        emit(sim_report, take(text));
        if (!sim_state_out.empty()) {
          check(ttn_state_to_json(out.get(), &text), "simulate");
          emit(sim_state_out, take(text));
        }
      }
    } else if (orc->parsed()) {
      Circuit c;
      load_circuit(orc_circuit, c);
      if (!orc_state.empty()) {
        State s;
        check(ttn_state_from_json(slurp(orc_state).c_str(), s.out()), "reading state " + orc_state);
        double f = 0.0;
        check(ttn_exact_fidelity(s.get(), c.get(), &f), "oracle");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", f);
        emit(orc_out, buf);
      } else {
        double* amps = nullptr;
        std::size_t n = 0;
        check(ttn_exact_statevector(c.get(), &amps, &n), "oracle");
        std::ostringstream os;
        os.precision(17);
        os << "{\"amplitudes\": [";
        for (std::size_t i = 0; i < 2 * n; ++i) os << (i ? ", " : "") << amps[i];
        os << "]}";
        ttn_buffer_free(amps);
        emit(orc_out, os.str());
      }
    } else if (cmp->parsed()) {
      char* text = nullptr;
      check(ttn_results_compare(slurp(cmp_results).c_str(), slurp(cmp_oracle).c_str(), &text), "compare");
      emit(cmp_out, take(text));
    } else if (rep->parsed()) {
      char* text = nullptr;
      check(ttn_results_report(slurp(rep_results).c_str(), &text), "report");
      emit(rep_out, take(text));
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "ttnsim: %s\n", f.message.c_str());
    return f.code;
  }
  return 0;
}
