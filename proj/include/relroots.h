/* C interface to the reliability-roots library.
 *
 * All objects are opaque handles created by the library and released with
 * the matching _free function.  Every fallible call returns a status code;
 * on failure the out parameters are untouched and relroots_last_error()
 * describes the problem (thread local, valid until the next failing call
 * on the same thread).  Strings returned through char** are heap copies
 * owned by the caller; release them with relroots_string_free.
 */
#ifndef RELROOTS_H
#define RELROOTS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relroots_status {
    RELROOTS_OK = 0,
    RELROOTS_ERR_INVALID_ARGUMENT = 1, /* null handles, bad sizes */
    RELROOTS_ERR_PARSE = 2,            /* malformed JSON or numbers */
    RELROOTS_ERR_DOMAIN = 3,           /* precondition violated */
    RELROOTS_ERR_RESOURCE = 4,         /* cap or budget exceeded */
    RELROOTS_ERR_INTERNAL = 5
} relroots_status;

typedef struct relroots_complex relroots_complex;
typedef struct relroots_graph relroots_graph;
typedef struct relroots_poly relroots_poly;

const char* relroots_version(void);
const char* relroots_status_name(relroots_status s);
const char* relroots_last_error(void);
void relroots_string_free(char* s);

/* ---- simplicial complexes ---- */

/* JSON: {"m": int, "facets": [[int,...],...]} with 0-based elements. */
relroots_status relroots_complex_from_json(const char* json, relroots_complex** out);
/* Builtins: "fano", "pm:<m>", "uniform:<m>:<r>", "cog:k4", "cog:royle-sokal". */
relroots_status relroots_complex_builtin(const char* name, relroots_complex** out);
void relroots_complex_free(relroots_complex* c);
relroots_status relroots_complex_to_json(const relroots_complex* c, char** json_out);
relroots_status relroots_complex_ground_size(const relroots_complex* c, int* out);
/* Full report: dimension, purity, F/H vectors, loops/coloops, matroid and
 * shellability status, reliability factorization, root report. */
relroots_status relroots_complex_analyze_json(const relroots_complex* c,
                                              int shelling_cap, char** json_out);
relroots_status relroots_complex_reliability(const relroots_complex* c,
                                             relroots_poly** out);
relroots_status relroots_complex_gen_substitute(const relroots_complex* c,
                                                const int* kvec, size_t kvec_len,
                                                relroots_poly** out);
relroots_status relroots_complex_search_json(const relroots_complex* c, int k_min,
                                             int k_max, int jobs, int only_outside,
                                             uint64_t budget, char** json_out);
relroots_status relroots_complex_search_csv(const relroots_complex* c, int k_min,
                                            int k_max, int jobs, int only_outside,
                                            uint64_t budget, char** csv_out);

/* ---- multigraphs ---- */

/* JSON: {"n": int, "edges": [[u,v],...]} with 0-based vertices. */
relroots_status relroots_graph_from_json(const char* json, relroots_graph** out);
/* Builtins: "k4", "royle-sokal". */
relroots_status relroots_graph_builtin(const char* name, relroots_graph** out);
void relroots_graph_free(relroots_graph* g);
relroots_status relroots_graph_cographic(const relroots_graph* g,
                                         relroots_complex** out);
/* order: 1-based edge positions, least first; pass NULL/0 for input order. */
relroots_status relroots_graph_chromatic_check_json(const relroots_graph* g,
                                                    const int* order,
                                                    size_t order_len,
                                                    char** json_out);

/* ---- polynomials (factored reliability form (1-q)^k * h(q)) ---- */

relroots_status relroots_poly_from_json(const char* json, relroots_poly** out);
/* decimal_coeffs: ascending h coefficients as decimal strings. */
relroots_status relroots_poly_from_coeffs(const char* const* decimal_coeffs,
                                          size_t n_coeffs,
                                          int unit_root_multiplicity,
                                          relroots_poly** out);
void relroots_poly_free(relroots_poly* p);
relroots_status relroots_poly_to_json(const relroots_poly* p, char** json_out);
relroots_status relroots_poly_roots_json(const relroots_poly* p, char** json_out);
relroots_status relroots_poly_root_scatter_csv(const relroots_poly* p, char** csv_out);

/* ---- demos and the random model ---- */

/* name: "rs" or "fano"; kvec NULL picks the demo's reference vector. */
relroots_status relroots_demo_json(const char* name, const int* kvec,
                                   size_t kvec_len, char** json_out);
relroots_status relroots_random_experiment_json(int m, int d, double p, int trials,
                                                uint64_t seed, double epsilon,
                                                int jobs, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* RELROOTS_H */
