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

#include "ttn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "ttn/error.hpp"
#include "ttn/oracle.hpp"
#include "ttn/svd_baseline.hpp"

namespace ttn {
namespace {

const std::set<std::string> kFamilies = {"brickwall",    "treelike-random", "treelike-inter",
                                         "qaoa-3reg",    "qaoa-bridged",    "qaoa-treelike"};

void config_check(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::Config, "config: " + msg);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text, const std::string& header) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return rows;  // empty input holds no rows
  std::getline(is, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) fail(ErrorKind::Config, "csv: unexpected header '" + line + "', expected '" + header + "'");
  const std::size_t ncols = split(header, ',').size();
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cols = split(line, ',');
    if (cols.size() != ncols)
      fail(ErrorKind::Config, "csv: row has " + std::to_string(cols.size()) + " fields, expected " +
                                  std::to_string(ncols));
    rows.push_back(std::move(cols));
  }
  return rows;
}

template <class T>
T parse_field(const std::string& s) {
  try {
    std::size_t pos = 0;
    T v{};
    if constexpr (std::is_same_v<T, double>)
      v = std::stod(s, &pos);
    else if constexpr (std::is_same_v<T, int>)
      v = std::stoi(s, &pos);
    else
      v = static_cast<T>(std::stoull(s, &pos));
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Config, "csv: cannot parse field '" + s + "'");
  }
}

constexpr const char* kResultsHeader = "family,N,depth,chi,method,instance,seed,N_2g,F_tilde,epsilon,M,wall_ms";
constexpr const char* kOracleHeader = "instance,seed,chi,method,F_exact";
constexpr const char* kTraceHeader = "chi,method,step,gate_ids,f,F_tilde,epsilon,M,sweeps,elapsed_ms";
constexpr const char* kReportHeader =
    "family,N,depth,chi,method,count,epsilon_mean,epsilon_std,epsilon_min,epsilon_max,"
    "F_tilde_mean,F_tilde_std,F_tilde_min,F_tilde_max";
constexpr const char* kCompareHeader = "family,N,depth,chi,instance,seed,F_tilde_dmrg,F_exact_dmrg,F_tilde_svd,F_exact_svd";

bool tree_driven(const std::string& family) {
  return family == "treelike-random" || family == "treelike-inter" || family == "qaoa-treelike";
}

TreeTopology base_layerwise(const ExperimentConfig& cfg) {
  return build_layerwise_regular(cfg.n, cfg.tree.branching, cfg.tree.qubits_per_leaf);
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint64_t instance_seed(std::uint64_t master, int instance) {
  std::uint64_t z = master + static_cast<std::uint64_t>(instance) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool ExperimentConfig::graph_family() const { return family.rfind("qaoa-", 0) == 0; }

std::vector<std::string> ExperimentConfig::methods() const {
  if (method == "both") return {"dmrg", "svd"};
  return {method};
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  static const std::set<std::string> keys = {
      "family", "n",       "depth",      "n_inter", "chi",    "tree",        "method",     "instances",
      "seed",   "threads", "sweeps",     "threshold", "batching", "svd_cutoff", "oracle", "timing",
      "save_states", "output"};
  config_check(j.is_object(), "top level must be an object");
  for (const auto& [k, v] : j.items()) config_check(keys.count(k) == 1, "unknown key '" + k + "'");
  ExperimentConfig c;
  try {
    c.family = j.at("family").get<std::string>();
    c.n = j.value("n", 0);
    c.depth = j.value("depth", 1);
    c.n_inter = j.value("n_inter", 0);
    if (j.contains("chi")) {
      const auto& x = j.at("chi");
      c.chi = x.is_array() ? x.get<std::vector<std::size_t>>() : std::vector<std::size_t>{x.get<std::size_t>()};
    }
    if (j.contains("tree")) {
      const auto& t = j.at("tree");
      static const std::set<std::string> tkeys = {"kind", "branching", "qubits_per_leaf", "ordering", "permutation"};
      for (const auto& [k, v] : t.items()) config_check(tkeys.count(k) == 1, "unknown key 'tree." + k + "'");
      c.tree.kind = t.value("kind", std::string{"layerwise"});
      c.tree.branching = t.value("branching", std::vector<int>{});
      c.tree.qubits_per_leaf = t.value("qubits_per_leaf", 1);
      c.tree.ordering = t.value("ordering", std::string{"blind"});
      c.tree.permutation = t.value("permutation", std::vector<int>{});
    }
    c.method = j.value("method", std::string{"dmrg"});
    c.instances = j.value("instances", 5);
    c.seed = j.value("seed", std::uint64_t{0});
    c.threads = j.value("threads", 1);
    c.sweeps = j.value("sweeps", 4);
    c.threshold = j.value("threshold", 1e-10);
    if (j.contains("batching")) {
      const auto& b = j.at("batching");
      if (b.is_string()) {
        config_check(b.get<std::string>() == "layer" || b.get<std::string>() == "gate",
                     "batching must be \"gate\", \"layer\" or an integer");
        c.layer = b.get<std::string>() == "layer";
      } else {
        c.gates_per_step = b.get<int>();
      }
    }
    c.svd_cutoff = j.value("svd_cutoff", 0.0);
    c.oracle = j.value("oracle", false);
    c.timing = j.value("timing", true);
    c.save_states = j.value("save_states", false);
    c.output = j.value("output", std::string{"out"});
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::Config, std::string("config: ") + e.what());
  }
  if (c.n == 0 && c.tree.kind == "layerwise" && !c.tree.branching.empty()) {
    int leaves = 1;
    for (int b : c.tree.branching) leaves *= std::max(b, 1);
    c.n = leaves * c.tree.qubits_per_leaf;
  }
  c.validate();
  return c;
}

Json ExperimentConfig::to_json() const {
  Json tree_j{{"kind", tree.kind},
              {"branching", tree.branching},
              {"qubits_per_leaf", tree.qubits_per_leaf},
              {"ordering", tree.ordering}};
  if (!tree.permutation.empty()) tree_j["permutation"] = tree.permutation;
  Json j{{"family", family},       {"n", n},           {"depth", depth},         {"n_inter", n_inter},
         {"chi", chi},             {"tree", tree_j},   {"method", method},       {"instances", instances},
         {"seed", seed},           {"threads", threads}, {"sweeps", sweeps},     {"threshold", threshold},
         {"svd_cutoff", svd_cutoff}, {"oracle", oracle}, {"timing", timing},     {"save_states", save_states},
         {"output", output}};
  j["batching"] = layer ? Json("layer") : Json(gates_per_step);
  return j;
}

void ExperimentConfig::validate() const {
  config_check(kFamilies.count(family) == 1,
               "family must be one of brickwall, treelike-random, treelike-inter, qaoa-3reg, qaoa-bridged, "
               "qaoa-treelike (got '" + family + "')");
  config_check(n >= 1, "n must be >= 1 (or give a layerwise tree to derive it)");
  config_check(depth >= 1, "depth must be >= 1");
  config_check(n_inter >= 0, "n_inter must be >= 0");
  config_check(!chi.empty(), "chi list must not be empty");
  for (auto x : chi) config_check(x >= 1, "every chi must be >= 1");
  config_check(method == "dmrg" || method == "svd" || method == "both", "method must be dmrg, svd or both");
  config_check(instances >= 1, "instances must be >= 1");
  config_check(threads >= 1, "threads must be >= 1");
  config_check(sweeps >= 1, "sweeps must be >= 1");
  config_check(threshold >= 0.0 && std::isfinite(threshold), "threshold must be finite and >= 0");
  config_check(gates_per_step >= 1, "batching must be >= 1 gates per step");
  config_check(svd_cutoff >= 0.0 && svd_cutoff < 1.0, "svd_cutoff must lie in [0, 1)");
  config_check(!oracle || n <= kDefaultDenseQubitCap,
               "oracle needs n <= " + std::to_string(kDefaultDenseQubitCap) + " (got " + std::to_string(n) + ")");

  config_check(tree.kind == "layerwise" || tree.kind == "path", "tree.kind must be layerwise or path");
  config_check(tree.ordering == "blind" || tree.ordering == "naive" || tree.ordering == "explicit",
               "tree.ordering must be blind, naive or explicit");
  config_check(tree.qubits_per_leaf >= 1, "tree.qubits_per_leaf must be >= 1");
  if (tree.kind == "layerwise") {
    config_check(!tree.branching.empty(), "a layerwise tree needs a branching list");
    long long leaves = 1;
    for (int b : tree.branching) {
      config_check(b >= 1, "tree.branching entries must be >= 1");
      leaves *= b;
      config_check(leaves <= (1 << 20), "tree.branching describes too many leaves");
    }
    config_check(leaves * tree.qubits_per_leaf == n, "tree has " + std::to_string(leaves * tree.qubits_per_leaf) +
                                                         " qubit slots but n = " + std::to_string(n));
  } else {
    config_check(tree.ordering == "blind", "path trees support only blind ordering");
    config_check(n % tree.qubits_per_leaf == 0, "n must be a multiple of tree.qubits_per_leaf for path trees");
    config_check(!tree_driven(family), family + " needs a layerwise tree");
  }
  if (tree.ordering == "naive") config_check(graph_family(), "naive ordering needs a graph family (qaoa-*)");
  if (tree.ordering == "naive" || tree.ordering == "explicit")
    config_check(family != "treelike-random" && family != "treelike-inter",
                 "tree-like random circuits are defined by the tree; use blind ordering");
  if (tree.ordering == "explicit") {
    config_check(static_cast<int>(tree.permutation.size()) == n, "tree.permutation must list all n qubits");
    std::vector<int> p = tree.permutation;
    std::sort(p.begin(), p.end());
    for (int i = 0; i < n; ++i) config_check(p[static_cast<std::size_t>(i)] == i, "tree.permutation is not a permutation");
  }
  if (family == "brickwall") config_check(n >= 2, "brickwall needs n >= 2");
  if (family == "qaoa-3reg") config_check(n >= 4 && n % 2 == 0, "qaoa-3reg needs even n >= 4");
  if (family == "qaoa-bridged") config_check(n >= 12 && n % 4 == 0, "qaoa-bridged needs n = 4k with k >= 3");
  if (family == "treelike-random" || family == "qaoa-treelike")
    config_check(tree.kind == "layerwise", family + " needs a layerwise tree");
}

TreeTopology build_topology(const ExperimentConfig& cfg, const Graph* g) {
  const int q = cfg.tree.qubits_per_leaf;
  if (cfg.tree.kind == "path") return build_path_topology(cfg.n, q);
  if (cfg.tree.ordering == "blind") return base_layerwise(cfg);
  std::vector<std::vector<int>> leaves;
  if (cfg.tree.ordering == "naive") {
    require(g != nullptr, "naive ordering needs a graph");
    const Clustering cl = cluster_graph(*g);
    leaves = reorder_for_tree(*g, cl, q).leaves;
  } else {
    for (std::size_t i = 0; i < cfg.tree.permutation.size(); i += static_cast<std::size_t>(q))
      leaves.emplace_back(cfg.tree.permutation.begin() + static_cast<std::ptrdiff_t>(i),
                          cfg.tree.permutation.begin() + static_cast<std::ptrdiff_t>(i + static_cast<std::size_t>(q)));
  }
  return build_from_clusters(cfg.n, leaves, cfg.tree.branching);
}

Instance make_instance(const ExperimentConfig& cfg, int index) {
  Instance inst;
  inst.index = index;
  inst.seed = instance_seed(cfg.seed, index);
  std::mt19937_64 rng(inst.seed);
  std::string graph_desc;
  if (cfg.family == "brickwall") {
    inst.circuit = brickwall_circuit(cfg.n, cfg.depth, rng);
  } else if (cfg.family == "treelike-random") {
    inst.circuit = treelike_circuit(base_layerwise(cfg), cfg.depth, rng);
  } else if (cfg.family == "treelike-inter") {
    inst.circuit = treelike_random_inter(base_layerwise(cfg), cfg.n_inter, cfg.depth, rng);
  } else {
    if (cfg.family == "qaoa-3reg") {
      inst.graph = random_3_regular(cfg.n, rng);
      graph_desc = "random-3-regular";
    } else if (cfg.family == "qaoa-bridged") {
      inst.graph = bridged_3_regular(cfg.n / 4);
      graph_desc = "bridged-3-regular";
    } else {
      inst.graph = treelike_graph(base_layerwise(cfg));
      graph_desc = "treelike";
    }
    const QaoaParams p = sample_qaoa_params(cfg.depth, rng);
    inst.circuit = qaoa_maxcut_circuit(*inst.graph, p.betas, p.gammas);
  }
  inst.topology = std::make_shared<const TreeTopology>(build_topology(cfg, inst.graph ? &*inst.graph : nullptr));
  auto& meta = inst.circuit.meta();
  meta.family = cfg.family;
  meta.depth = cfg.depth;
  meta.seed = inst.seed;
  meta.graph = graph_desc;
  return inst;
}

InstanceResult run_instance(const ExperimentConfig& cfg, int index) {
  const Instance inst = make_instance(cfg, index);
  InstanceResult out;
  const std::string tag = std::to_string(index);
  out.artifacts.emplace_back("circuit-" + tag + ".json", circuit_to_json(inst.circuit).dump(2) + "\n");
  out.artifacts.emplace_back("topology-" + tag + ".json", topology_to_json(*inst.topology).dump(2) + "\n");
  if (inst.graph) out.artifacts.emplace_back("graph-" + tag + ".txt", graph_to_text(*inst.graph));

  std::vector<cplx> exact;
  if (cfg.oracle) exact = exact_simulate(inst.circuit);
  const TTNState init = TTNState::product_state(inst.topology, Bitstring(static_cast<std::size_t>(cfg.n), 0));
  for (std::size_t chi : cfg.chi) {
    const BondSpec caps = BondSpec::uniform(*inst.topology, chi);
    for (const auto& method : cfg.methods()) {
      std::pair<TTNState, CompressionReport> run = [&] {
        if (method == "svd") return run_circuit_svd(init, inst.circuit, caps, cfg.svd_cutoff);
        SweepConfig sc;
        sc.max_sweeps = cfg.sweeps;
        sc.threshold = cfg.threshold;
        sc.caps = caps;
        BatchPolicy bp;
        bp.gates_per_step = cfg.gates_per_step;
        bp.layer = cfg.layer;
        return run_circuit(init, inst.circuit, sc, bp);
      }();
      const auto& rep = run.second;
      ResultRow row{cfg.family, cfg.n,        cfg.depth,       chi,         method,     index,
                    inst.seed,  rep.two_qubit_gates, rep.fidelity, rep.epsilon, rep.memory, cfg.timing ? rep.wall_ms : 0.0};
      out.rows.push_back(row);
      for (const auto& st : rep.steps) out.trace.push_back({chi, method, st});
      if (cfg.oracle) out.oracle.push_back({index, inst.seed, chi, method, state_fidelity(exact, to_statevector(run.first))});
      if (cfg.save_states)
        out.artifacts.emplace_back("state-" + tag + "-chi" + std::to_string(chi) + "-" + method + ".json",
                                   state_to_json(run.first).dump() + "\n");
    }
  }
  return out;
}

std::vector<ResultRow> ExperimentResult::rows() const {
  std::vector<ResultRow> out;
  for (const auto& i : instances) out.insert(out.end(), i.rows.begin(), i.rows.end());
  return out;
}

std::vector<OracleRow> ExperimentResult::oracle_rows() const {
  std::vector<OracleRow> out;
  for (const auto& i : instances) out.insert(out.end(), i.oracle.begin(), i.oracle.end());
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress) {
  cfg.validate();
  ExperimentResult res;
  res.instances.resize(static_cast<std::size_t>(cfg.instances));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cfg.instances));
  std::atomic<int> next{0};
  std::mutex progress_mu;
  auto worker = [&] {
    for (int i = next++; i < cfg.instances; i = next++) {
      try {
        res.instances[static_cast<std::size_t>(i)] = run_instance(cfg, i);
        if (progress) {
          std::lock_guard lock(progress_mu);
          for (const auto& r : res.instances[static_cast<std::size_t>(i)].rows) progress(i, r.chi, r.method);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const int nthreads = std::min(cfg.threads, cfg.instances);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return res;
}

void write_outputs(const ExperimentConfig& cfg, const ExperimentResult& r, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create output directory " + dir + ": " + ec.message());
  const fs::path base(dir);
  write_text_file((base / "results.csv").string(), results_csv(r.rows()));
  write_json_file((base / "config.json").string(), cfg.to_json());
  for (std::size_t i = 0; i < r.instances.size(); ++i) {
    const auto& inst = r.instances[i];
    write_text_file((base / ("ftrace-" + std::to_string(i) + ".csv")).string(), ftrace_csv(inst.trace, cfg.timing));
    for (const auto& [name, text] : inst.artifacts) write_text_file((base / name).string(), text);
  }
  if (cfg.oracle) write_text_file((base / "oracle.csv").string(), oracle_csv(r.oracle_rows()));
}

std::string results_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << kResultsHeader << '\n';
  for (const auto& r : rows) {
    os << r.family << ',' << r.n << ',' << r.depth << ',' << r.chi << ',' << r.method << ',' << r.instance << ','
       << r.seed << ',' << r.n2g << ',' << format_double(r.fidelity) << ',' << format_double(r.epsilon) << ','
       << r.memory << ',' << format_double(r.wall_ms) << '\n';
  }
  return os.str();
}

std::vector<ResultRow> parse_results_csv(const std::string& text) {
  std::vector<ResultRow> out;
  for (const auto& c : parse_csv(text, kResultsHeader)) {
    ResultRow r;
    r.family = c[0];
    r.n = parse_field<int>(c[1]);
    r.depth = parse_field<int>(c[2]);
    r.chi = parse_field<std::size_t>(c[3]);
    r.method = c[4];
    r.instance = parse_field<int>(c[5]);
    r.seed = parse_field<std::uint64_t>(c[6]);
    r.n2g = parse_field<int>(c[7]);
    r.fidelity = parse_field<double>(c[8]);
    r.epsilon = parse_field<double>(c[9]);
    r.memory = parse_field<std::uint64_t>(c[10]);
    r.wall_ms = parse_field<double>(c[11]);
    out.push_back(std::move(r));
  }
  return out;
}

std::string ftrace_csv(const std::vector<TraceRow>& rows, bool timing) {
  std::ostringstream os;
  os << kTraceHeader << '\n';
  for (const auto& t : rows) {
    const auto& s = t.step;
    os << t.chi << ',' << t.method << ',' << s.step << ',';
    for (std::size_t i = 0; i < s.gate_ids.size(); ++i) os << (i ? ";" : "") << s.gate_ids[i];
    os << ',' << format_double(s.fidelity) << ',' << format_double(s.cumulative) << ',' << format_double(s.epsilon)
       << ',' << s.memory << ',' << s.sweeps << ',' << format_double(timing ? s.elapsed_ms : 0.0) << '\n';
  }
  return os.str();
}

std::string oracle_csv(const std::vector<OracleRow>& rows) {
  std::ostringstream os;
  os << kOracleHeader << '\n';
  for (const auto& r : rows)
    os << r.instance << ',' << r.seed << ',' << r.chi << ',' << r.method << ',' << format_double(r.exact) << '\n';
  return os.str();
}

std::vector<OracleRow> parse_oracle_csv(const std::string& text) {
  std::vector<OracleRow> out;
  for (const auto& c : parse_csv(text, kOracleHeader))
    out.push_back({parse_field<int>(c[0]), parse_field<std::uint64_t>(c[1]), parse_field<std::size_t>(c[2]), c[3],
                   parse_field<double>(c[4])});
  return out;
}

std::string report_csv(const std::vector<ResultRow>& rows) {
  using Key = std::tuple<std::string, int, int, std::size_t, std::string>;
  std::map<Key, std::vector<const ResultRow*>> groups;
  for (const auto& r : rows) groups[{r.family, r.n, r.depth, r.chi, r.method}].push_back(&r);
  std::ostringstream os;
  os << kReportHeader << '\n';
  auto stats = [](const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double sd = v.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return format_double(mean) + ',' + format_double(sd) + ',' + format_double(*lo) + ',' + format_double(*hi);
  };
  for (const auto& [k, g] : groups) {
    std::vector<double> eps, fid;
    for (const auto* r : g) {
      eps.push_back(r->epsilon);
      fid.push_back(r->fidelity);
    }
    os << std::get<0>(k) << ',' << std::get<1>(k) << ',' << std::get<2>(k) << ',' << std::get<3>(k) << ','
       << std::get<4>(k) << ',' << g.size() << ',' << stats(eps) << ',' << stats(fid) << '\n';
  }
  return os.str();
}

std::string compare_csv(const std::vector<ResultRow>& rows, const std::vector<OracleRow>& oracle) {
  struct Joined {
    const ResultRow* any = nullptr;
    std::optional<double> ft[2], fx[2];
  };
  std::map<std::pair<std::size_t, int>, Joined> table;
  auto slot = [](const std::string& m) { return m == "dmrg" ? 0 : m == "svd" ? 1 : -1; };
  for (const auto& r : rows) {
    const int s = slot(r.method);
    if (s < 0) continue;
    auto& j = table[{r.chi, r.instance}];
    j.any = &r;
    j.ft[s] = r.fidelity;
  }
  for (const auto& o : oracle) {
    const int s = slot(o.method);
    auto it = table.find({o.chi, o.instance});
    if (s < 0 || it == table.end()) continue;
    it->second.fx[s] = o.exact;
  }
  auto cell = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string{}; };
  std::ostringstream os;
  os << kCompareHeader << '\n';
  for (const auto& [k, j] : table) {
    const auto& r = *j.any;
    os << r.family << ',' << r.n << ',' << r.depth << ',' << r.chi << ',' << r.instance << ',' << r.seed << ','
       << cell(j.ft[0]) << ',' << cell(j.fx[0]) << ',' << cell(j.ft[1]) << ',' << cell(j.fx[1]) << '\n';
  }
  return os.str();
}

}  // namespace ttn
