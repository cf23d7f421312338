/*
 * netperturb -- measuring how complex-network topology measurements respond
 * to progressive perturbation (size growth, edge removal, edge rewiring).
 *
 * C API for the shared library. All functions returning np_status report
 * failure details through np_last_error(); handles are opaque and owned by
 * the caller until passed to the matching *_free.
 */
#ifndef NETPERTURB_H
#define NETPERTURB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct np_graph np_graph;
typedef struct np_rng np_rng;

typedef enum np_status {
    NP_OK = 0,
    NP_ERR_ARGUMENT = 1, /* invalid argument to an operation */
    NP_ERR_CONFIG = 2,   /* configuration rejected (np_last_error lists every issue) */
    NP_ERR_RUNTIME = 3,  /* computation failed (degenerate input, no convergence) */
    NP_ERR_IO = 4,       /* file could not be read or written */
    NP_ERR_NOMEM = 5
} np_status;

#define NP_MEASUREMENT_COUNT 14

/* Per-measurement degeneracy flags reported by np_measure_all. */
typedef enum np_flag {
    NP_FLAG_NONE = 0,
    NP_FLAG_ZERO_VARIANCE = 1,
    NP_FLAG_DISCONNECTED = 2,
    NP_FLAG_ISOLATED_NODES = 3,
    NP_FLAG_UNDEFINED = 4 /* value is NaN */
} np_flag;

const char* np_version(void);

/* Message for the most recent failure on this thread; valid until the next
 * library call from the same thread. */
const char* np_last_error(void);

/* ---- graphs ------------------------------------------------------------ */

/* endpoints holds edge_count (u, v) pairs flattened to 2*edge_count ints. */
np_status np_graph_create(int32_t node_count, const int32_t* endpoints, int64_t edge_count,
                          np_graph** out);

/* Edge-list text format: "N E" header, then one "u v" line per edge
 * (optionally "u v xu yu xv yv" when node coordinates are present). */
np_status np_graph_load(const char* path, np_graph** out);
np_status np_graph_save(const np_graph* g, const char* path);

int32_t np_graph_node_count(const np_graph* g);
int64_t np_graph_edge_count(const np_graph* g);
int32_t np_graph_degree(const np_graph* g, int32_t node);

/* Copies the sorted edge list into endpoints (room for 2*edge_count ints). */
np_status np_graph_edges(const np_graph* g, int32_t* endpoints);

void np_graph_free(np_graph* g);

/* ---- generators --------------------------------------------------------- */

/* Uniform random graph with exactly round(n*avg_degree/2) edges. */
np_status np_gen_er(int32_t n, double avg_degree, uint64_t seed, np_graph** out);

/* Preferential attachment, m edges per added node, clique core on m nodes. */
np_status np_gen_ba(int32_t n, int32_t m, uint64_t seed, np_graph** out);

/* Delaunay triangulation of a side*side lattice jittered by +-epsilon. */
np_status np_gen_geo(int32_t side, double epsilon, uint64_t seed, np_graph** out);

/* ---- perturbations ------------------------------------------------------ */

np_status np_rng_create(uint64_t seed, np_rng** out);
void np_rng_free(np_rng* r);

/* Removes one uniformly random edge. */
np_status np_remove_random_edge(np_graph* g, np_rng* r);

/* Removes a uniform edge, adds a uniform currently-absent pair (never the
 * pair just removed); node count and edge count are preserved. */
np_status np_rewire_random_edge(np_graph* g, np_rng* r);

/* ---- measurements ------------------------------------------------------- */

/* Abbreviated measurement name for index 0..NP_MEASUREMENT_COUNT-1
 * ("Degree", "Clust.Coeff.", ..., "Gen.Access."). */
const char* np_measurement_name(int index);

/* All 14 network-level values plus per-measurement np_flag entries. */
np_status np_measure_all(const np_graph* g, double values[NP_MEASUREMENT_COUNT],
                         int flags[NP_MEASUREMENT_COUNT]);

/* Same as a flat JSON object keyed by measurement name, with a "flags"
 * sub-object for degenerate entries. Free with np_string_free. */
np_status np_measure_json(const np_graph* g, char** out_json);

void np_string_free(char* s);

/* ---- coincidence similarity --------------------------------------------- */

/* Product of the multiset Jaccard index (exponent jaccard_exponent) and the
 * interiority index (exponent interiority_exponent) over nonnegative
 * vectors; delta regularizes the 0/0 case. */
np_status np_coincidence(const double* x, const double* y, size_t len, double delta,
                         double jaccard_exponent, double interiority_exponent, double* out);

/* ---- pipeline ------------------------------------------------------------ */

/* Parses and validates a config file. On NP_ERR_CONFIG, out_errors_json (if
 * non-NULL) receives a JSON array listing every violation. */
np_status np_validate_config(const char* path, char** out_errors_json);

/* Full run: writes raw.csv, curves.csv, stats.csv, per-cell simnet.{json,dot}
 * and dendrogram.{nwk,json}, membership.csv (full 3x3 batches), meta.json. */
np_status np_run_pipeline(const char* config_path, const char* out_dir);

/* Builds a similarity network from a curves.csv produced by np_run_pipeline,
 * selecting one (model, experiment) cell. stats_csv may be NULL (node labels
 * omitted). Either output path may be NULL to skip that format. */
np_status np_simnet_from_curves(const char* curves_csv, const char* model, const char* experiment,
                                const char* stats_csv, double delta, double jaccard_exponent,
                                double interiority_exponent, const char* out_json,
                                const char* out_dot);

/* Agglomerative clustering of a simnet.json ("average", "single" or
 * "complete" linkage). Either output path may be NULL. */
np_status np_cluster_from_simnet(const char* simnet_json, const char* linkage,
                                 const char* out_newick, const char* out_json);

/* Rebuilds the 14 x 9 membership table from a stats.csv covering all nine
 * (model, experiment) cells. */
np_status np_membership_from_stats(const char* stats_csv, const char* out_csv);

#ifdef __cplusplus
}
#endif

#endif /* NETPERTURB_H */
