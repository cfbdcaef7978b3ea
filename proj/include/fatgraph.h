/* C interface to the fatgraph toolkit: exact solvers and constructions for
 * geometric intersection graphs of fat objects.
 *
 * All functions return fg_status; on failure fg_last_error() carries a
 * thread-local message. Handles are opaque and must be released with the
 * matching *_free function; strings returned through char** are owned by the
 * caller and released with fg_string_free.
 *
 * Structured payloads (instances, options, results) travel as JSON; the
 * schemas are documented in docs/FORMATS.md.
 */
#ifndef FATGRAPH_H
#define FATGRAPH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fg_status {
  FG_OK = 0,
  FG_INVALID_INPUT = 2,
  FG_INFEASIBLE = 3, /* reserved for callers mapping infeasibility to codes */
  FG_VERIFY_FAILED = 4,
  FG_UNSUPPORTED = 5,
  FG_INTERNAL_ERROR = 6
} fg_status;

typedef struct fg_instance fg_instance;         /* geometric object set */
typedef struct fg_graph fg_graph;               /* intersection graph */
typedef struct fg_separator fg_separator;       /* clique separator */
typedef struct fg_partition fg_partition;       /* kappa-partition + graph */
typedef struct fg_decomposition fg_decomposition; /* weighted tree decomposition */
typedef struct fg_solution fg_solution;         /* solver result */
typedef struct fg_wiring fg_wiring;             /* grid wiring */

const char* fg_last_error(void);
void fg_string_free(char* s);

void fg_instance_free(fg_instance* h);
void fg_graph_free(fg_graph* h);
void fg_separator_free(fg_separator* h);
void fg_partition_free(fg_partition* h);
void fg_decomposition_free(fg_decomposition* h);
void fg_solution_free(fg_solution* h);
void fg_wiring_free(fg_wiring* h);

/* Geometric instances. config: {"d","n","box_fraction","size_ratio",
 * "region_side","seed"}. */
fg_status fg_instance_from_json(const char* json, fg_instance** out);
fg_status fg_instance_generate(const char* config_json, fg_instance** out);
fg_status fg_instance_to_json(const fg_instance* h, char** out_json);
fg_status fg_instance_size(const fg_instance* h, int* out_n);

/* Exact intersection graphs. */
fg_status fg_graph_build(const fg_instance* h, fg_graph** out);
fg_status fg_graph_from_json(const char* json, fg_graph** out);
fg_status fg_graph_to_json(const fg_graph* h, char** out_json);

/* Balanced clique separator. options: {"gamma":"log","exact_h0":false}. */
fg_status fg_separate(const fg_instance* h, const char* options_json, fg_separator** out);
fg_status fg_separator_from_json(const char* json, fg_separator** out);
fg_status fg_separator_to_json(const fg_separator* h, char** out_json);
fg_status fg_separator_validate(const fg_separator* h, const fg_graph* g, int dimension,
                                char** out_report_json);

/* Kappa-partition of a graph (geometry-free). options: {"gamma":"log"}. */
fg_status fg_partition_build(const fg_graph* g, const char* options_json, fg_partition** out);
fg_status fg_partition_from_json(const char* json, fg_partition** out);
fg_status fg_partition_to_json(const fg_partition* h, char** out_json);

/* Weighted tree decomposition of the contraction.
 * options: {"method":"separator"|"blowup","c":4.0,"gamma":"log"};
 * the separator method needs the geometric instance. */
fg_status fg_decompose(const fg_partition* h, const fg_instance* geometry,
                       const char* options_json, fg_decomposition** out);
fg_status fg_decomposition_to_json(const fg_decomposition* h, char** out_json);
fg_status fg_decomposition_validate(const fg_decomposition* h, const fg_partition* p,
                                    char** out_report_json);

/* Exact solvers. problem: {"problem":"is|vc|ds|rds|steiner|mif|fvs|cvc",
 * "r":1,"terminals":[...],"budget":-1,"method":"blowup"|"separator",
 * "no_prune":false,"gamma":"log","c":4.0}. Infeasibility is reported inside
 * the solution JSON, not as a status. */
fg_status fg_solve(const fg_graph* g, const fg_instance* geometry, const char* problem_json,
                   fg_solution** out);
fg_status fg_solve_separator_recursion_is(const fg_instance* h, const char* options_json,
                                          fg_solution** out);
fg_status fg_oracle_solve(const fg_graph* g, const char* problem_json, fg_solution** out);
fg_status fg_solution_to_json(const fg_solution* h, char** out_json);
fg_status fg_solution_feasible(const fg_solution* h, int* out_feasible);

/* Cube wiring. instance: {"d":3,"n":[8,8],"pairs":[[[x,y],[x,y]],...]}. */
fg_status fg_wire(const char* instance_json, fg_wiring** out);
fg_status fg_wiring_to_json(const fg_wiring* h, char** out_json);
fg_status fg_wiring_from_json(const char* json, fg_wiring** out);
fg_status fg_wiring_verify(const fg_wiring* h, const char* instance_json,
                           char** out_report_json);

/* Grid-minor embedding of a graph; the report carries the embedding, the
 * structural verification and the contract-and-compare check. */
fg_status fg_embed_minor(const fg_graph* g, int dimension, char** out_report_json);

/* Exhaustive representative-set property check over random weighted
 * partition sets with universe sizes 2..max_universe. */
fg_status fg_reduce_selftest(int sets, int max_universe, unsigned long seed,
                             char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* FATGRAPH_H */
