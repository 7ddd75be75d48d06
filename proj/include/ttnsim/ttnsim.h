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

/*
 * C interface to the tree tensor network circuit simulator.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a ttn_status; on
 * failure ttn_last_error() describes the problem (per thread). Strings and
 * buffers returned through out-parameters are released with ttn_string_free
 * and ttn_buffer_free.
 */
#ifndef TTNSIM_TTNSIM_H_
#define TTNSIM_TTNSIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TTNSIM_BUILDING_LIBRARY)
#define TTNSIM_API __attribute__((visibility("default")))
#else
#define TTNSIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ttn_status {
  TTN_OK = 0,
  TTN_ERR_INVALID_ARGUMENT = 1,
  TTN_ERR_NUMERICAL = 2,
  TTN_ERR_CONFIG = 3,
  TTN_ERR_IO = 4,
  TTN_ERR_INTERNAL = 5
} ttn_status;

typedef struct ttn_graph ttn_graph;
typedef struct ttn_topology ttn_topology;
typedef struct ttn_circuit ttn_circuit;
typedef struct ttn_state ttn_state;
typedef struct ttn_report ttn_report;

typedef struct ttn_sim_options {
  int max_sweeps;       /* >= 1 */
  double threshold;     /* per-sweep improvement that stops sweeping */
  int gates_per_step;   /* two-qubit gates per compression step */
  int layer;            /* nonzero: batch consecutive gates on disjoint qubits */
  double svd_cutoff;    /* relative singular value cutoff for the svd method */
} ttn_sim_options;

typedef void (*ttn_progress_fn)(int instance, size_t chi, const char* method, void* user);

TTNSIM_API const char* ttn_version(void);
TTNSIM_API const char* ttn_last_error(void);
TTNSIM_API const char* ttn_status_name(ttn_status s);
TTNSIM_API void ttn_string_free(char* s);
TTNSIM_API void ttn_buffer_free(double* p);

/* graphs */
TTNSIM_API ttn_status ttn_graph_random_3_regular(int n, uint64_t seed, ttn_graph** out);
TTNSIM_API ttn_status ttn_graph_bridged_3_regular(int n_clusters, ttn_graph** out);
TTNSIM_API ttn_status ttn_graph_treelike(const ttn_topology* t, ttn_graph** out);
TTNSIM_API ttn_status ttn_graph_from_text(const char* text, ttn_graph** out);
TTNSIM_API ttn_status ttn_graph_to_text(const ttn_graph* g, char** out);
TTNSIM_API ttn_status ttn_graph_size(const ttn_graph* g, int* vertices, int* edges);
TTNSIM_API void ttn_graph_free(ttn_graph* g);

/* topologies */
TTNSIM_API ttn_status ttn_topology_layerwise(int n, const int* branching, size_t levels, int qubits_per_leaf,
                                             ttn_topology** out);
TTNSIM_API ttn_status ttn_topology_path(int n, int qubits_per_node, ttn_topology** out);
/* Leaves from modularity clustering of g, packed to `leaf_capacity` qubits. */
TTNSIM_API ttn_status ttn_topology_naive(const ttn_graph* g, const int* branching, size_t levels, int leaf_capacity,
                                         ttn_topology** out);
TTNSIM_API ttn_status ttn_topology_from_json(const char* json, ttn_topology** out);
TTNSIM_API ttn_status ttn_topology_to_json(const ttn_topology* t, char** out);
TTNSIM_API ttn_status ttn_topology_size(const ttn_topology* t, int* qubits, int* nodes);
TTNSIM_API void ttn_topology_free(ttn_topology* t);

/* circuits */
TTNSIM_API ttn_status ttn_circuit_brickwall(int n, int depth, uint64_t seed, ttn_circuit** out);
/* n_inter < 0 selects the fixed tree-like layout; otherwise that many random
 * inter-cluster gates replace the fixed ones. */
TTNSIM_API ttn_status ttn_circuit_treelike(const ttn_topology* t, int depths, int n_inter, uint64_t seed,
                                           ttn_circuit** out);
TTNSIM_API ttn_status ttn_circuit_qaoa(const ttn_graph* g, int p, uint64_t seed, ttn_circuit** out);
TTNSIM_API ttn_status ttn_circuit_from_json(const char* json, ttn_circuit** out);
TTNSIM_API ttn_status ttn_circuit_to_json(const ttn_circuit* c, char** out);
TTNSIM_API ttn_status ttn_circuit_size(const ttn_circuit* c, int* qubits, int* gates, int* two_qubit_gates);
TTNSIM_API void ttn_circuit_free(ttn_circuit* c);

/* states */
TTNSIM_API ttn_status ttn_state_zero(const ttn_topology* t, ttn_state** out);
TTNSIM_API ttn_status ttn_state_from_json(const char* json, ttn_state** out);
TTNSIM_API ttn_status ttn_state_to_json(const ttn_state* s, char** out);
TTNSIM_API ttn_status ttn_state_memory(const ttn_state* s, uint64_t* out);
TTNSIM_API ttn_status ttn_state_norm(const ttn_state* s, double* out);
TTNSIM_API void ttn_state_free(ttn_state* s);

/* simulation */
TTNSIM_API void ttn_sim_options_default(ttn_sim_options* o);
/* method is "dmrg" or "svd"; chi caps every bond (clipped to its structural
 * maximum). opts may be NULL for defaults. */
TTNSIM_API ttn_status ttn_simulate(const ttn_state* init, const ttn_circuit* c, const char* method, size_t chi,
                                   const ttn_sim_options* opts, ttn_state** out_state, ttn_report** out_report);
TTNSIM_API ttn_status ttn_report_summary(const ttn_report* r, double* f_tilde, double* epsilon, int* two_qubit_gates,
                                         uint64_t* memory);
TTNSIM_API ttn_status ttn_report_to_json(const ttn_report* r, char** out);
TTNSIM_API void ttn_report_free(ttn_report* r);

/* dense oracle (at most 20 qubits) */
TTNSIM_API ttn_status ttn_exact_statevector(const ttn_circuit* c, double** interleaved, size_t* amplitudes);
TTNSIM_API ttn_status ttn_exact_fidelity(const ttn_state* s, const ttn_circuit* c, double* out);

/* experiments */
/* Runs a JSON experiment config and writes its outputs. output_dir and
 * threads override the config when non-NULL / positive. */
TTNSIM_API ttn_status ttn_experiment_run(const char* config_json, const char* output_dir, int threads,
                                         ttn_progress_fn progress, void* user);
TTNSIM_API ttn_status ttn_results_report(const char* results_csv, char** out_csv);
TTNSIM_API ttn_status ttn_results_compare(const char* results_csv, const char* oracle_csv, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* TTNSIM_TTNSIM_H_ */
