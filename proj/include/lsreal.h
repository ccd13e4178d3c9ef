/* lsreal: exact invariants of point-line incidence structures and their
 * realization schemes.
 *
 * All composite inputs and outputs travel as JSON text. Strings returned
 * through char** are heap-allocated; release them with lsreal_string_free.
 * Every function returns a status code; on failure, lsreal_last_error()
 * holds a message for the calling thread.
 *
 * Formats:
 *   space    {"n": 7, "lines": [[1,2,3], ...]}           1-based point labels
 *   family   same shape, members of any size
 *   framing  {"space": ..., "n_prime": k, "n_doubleprime": m, "ordering": [...]}
 *   ideal    {"ring": {"coeff": "Q", "vars": [...]}, "generators": ["y1 - 1", ...]}
 *   basis    ideal plus {"order": "degrevlex"|"lex"|"elim:<k>", "elements": [...]}
 */

#ifndef LSREAL_H
#define LSREAL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    LSREAL_OK = 0,
    LSREAL_ERROR_INVALID = 1,  /* precondition violated */
    LSREAL_ERROR_PARSE = 2,    /* malformed input */
    LSREAL_ERROR_BUDGET = 3,   /* resource cap exceeded */
    LSREAL_ERROR_MISMATCH = 4, /* verification found differences */
    LSREAL_ERROR_UNKNOWN = 5,  /* unknown name */
    LSREAL_ERROR_INTERNAL = 6
} lsreal_status;

typedef struct lsreal_space lsreal_space; /* an immutable linear space */
typedef struct lsreal_enum lsreal_enum;   /* an enumeration stream */

const char* lsreal_version(void);
const char* lsreal_last_error(void); /* thread-local; valid until the next call */
void lsreal_string_free(char* s);

/* ---- linear spaces ----------------------------------------------------- */

lsreal_status lsreal_space_parse(const char* space_json, lsreal_space** out);
/* closure of an arbitrary collinearity family */
lsreal_status lsreal_space_close(const char* family_json, lsreal_space** out);
lsreal_status lsreal_space_json(const lsreal_space* s, char** out);
void lsreal_space_free(lsreal_space* s);

/* {"valid": true} or {"valid": false, "axiom": 2, "witness": [..], "message": ...} */
lsreal_status lsreal_validate(const char* family_json, char** report_json);
lsreal_status lsreal_leq(const lsreal_space* a, const lsreal_space* b, int* out);
lsreal_status lsreal_is_collinear(const lsreal_space* s, const int* points, int count, int* out);
/* assignment maps point i (1-based) to assignment[i-1] in {1..target_n} */
lsreal_status lsreal_quotient(const lsreal_space* s, const int* assignment, int source_n,
                              int target_n, lsreal_space** out);
lsreal_status lsreal_induced(const lsreal_space* s, const int* keep, int count, lsreal_space** out);

/* ---- isomorphism, generation, reduction -------------------------------- */

/* {"certificate": "...", "relabeling": [...], "automorphism_generators": n} */
lsreal_status lsreal_canonical(const lsreal_space* s, char** result_json);
/* {"isomorphic": bool, "witness": [...]} */
lsreal_status lsreal_isomorphic(const lsreal_space* a, const lsreal_space* b, char** result_json);
lsreal_status lsreal_superfiguration(const lsreal_space* s, int* out);
/* at_point = 0 picks the point with the fewest full lines; result
 * {"reducible": bool, "removed_point": i, "fiber_codim": N, "reduced": space} */
lsreal_status lsreal_glynn_reduce(const lsreal_space* s, int at_point, char** step_json);
/* iterate to a superfiguration or a single point:
 * {"steps": [{"removed_point": i, "fiber_codim": N}...], "result": space} */
lsreal_status lsreal_reduce_fully(const lsreal_space* s, char** trace_json);

lsreal_status lsreal_enum_new(int n, int superfigurations_only, int workers, lsreal_enum** out);
/* yields one canonical representative per class in certificate order;
 * *space_json is NULL after the last one */
lsreal_status lsreal_enum_next(lsreal_enum* e, char** space_json);
void lsreal_enum_free(lsreal_enum* e);

/* ---- framing and the scheme pipeline ----------------------------------- */

/* identity framing when the labeling already satisfies the conventions,
 * else the first constructive V-shaped frame */
lsreal_status lsreal_frame(const lsreal_space* s, char** framing_json);
/* determinant ideal of a framing (adds determinant counts to the ideal) */
lsreal_status lsreal_ideal(const char* framing_json, char** ideal_json);
lsreal_status lsreal_groebner(const char* ideal_json, const char* order, uint64_t step_budget,
                              char** basis_json);
/* {"ideal": ..., "substitutions": [{"var": ..., "replacement": ...}]} */
lsreal_status lsreal_eliminate(const char* ideal_json, char** result_json);
lsreal_status lsreal_dimension(const char* basis_json, int* out);
/* requires dimension 0: {"krull_dimension": 0, "vector_space_dimension": d,
 * "minimal_polynomials": {...}} */
lsreal_status lsreal_summary(const char* basis_json, char** summary_json);
/* whole pipeline; optimize_frame != 0 searches every V-shaped frame for the
 * minimal (dimension, quotient dimension) */
lsreal_status lsreal_analyze(const lsreal_space* s, int optimize_frame, uint64_t step_budget,
                             char** analysis_json);

/* ---- counting over prime fields ---------------------------------------- */

/* mode: "chart" (needs a framing), "framed-weak", "framed-strong",
 * "strong-total"; frame4 may be NULL for the first combinatorial frame.
 * naive != 0 uses the exhaustive oracle. */
lsreal_status lsreal_count(const lsreal_space* s, const char* framing_json, uint64_t q,
                           const char* mode, const int* frame4, int naive, char** result_json);
/* {"<p>": true|false, ...} per prime via framed-strong counts */
lsreal_status lsreal_scan(const lsreal_space* s, const uint64_t* primes, int count,
                          char** result_json);

/* ---- catalog and census ------------------------------------------------ */

/* dir may be NULL for the built-in location */
lsreal_status lsreal_catalog_list(const char* dir, char** names_json);
lsreal_status lsreal_catalog_entry(const char* dir, const char* name, char** entry_json);
/* LSREAL_ERROR_MISMATCH when a check fails; report lists every check */
lsreal_status lsreal_catalog_verify(const char* dir, const char* name, char** report_json);

typedef void (*lsreal_line_fn)(const char* line_json, void* user);
/* one row per superfiguration on n points plus a summary; cache_dir may be
 * NULL (no cache) and workers 0 (hardware concurrency) */
lsreal_status lsreal_census(int n, const char* cache_dir, int workers, uint64_t step_budget,
                            lsreal_line_fn on_row, void* user, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* LSREAL_H */
