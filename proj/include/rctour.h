/* rctour -- rainbow connectivity of tournaments.
 *
 * C API over the rctour core: opaque handles, status codes, and JSON
 * strings for structured results. Every char** output is allocated by the
 * library and must be released with rct_string_free. On any status other
 * than RCT_OK, rct_last_error() returns a one-line diagnostic (thread-local,
 * valid until the next rctour call on the same thread).
 */
#ifndef RCTOUR_H
#define RCTOUR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rct_status {
  RCT_OK = 0,
  RCT_ERR_INVALID_ARGUMENT = 1, /* malformed value, bad handle, null output */
  RCT_ERR_DOMAIN = 2,           /* precondition on the operation violated */
  RCT_ERR_PARSE = 3,            /* malformed JSON input */
  RCT_ERR_LIMIT = 4,            /* size/cost cap exceeded */
  RCT_ERR_UNKNOWN = 5
} rct_status;

typedef struct rct_digraph rct_digraph; /* finite simple digraph, order <= 64 */
typedef struct rct_colored rct_colored; /* digraph + total arc coloring */

const char* rct_version(void);
const char* rct_last_error(void);
void rct_string_free(char* s);

/* ---- digraphs ---- */

/* Circulant C_n(S): arc (i, j) iff (j - i) mod n is in diffs. */
rct_status rct_circulant(int order, const int* diffs, int diff_count,
                         rct_digraph** out);
rct_status rct_digraph_from_json(const char* json, rct_digraph** out);
rct_status rct_digraph_to_json(const rct_digraph* g, char** out_json);
void rct_digraph_free(rct_digraph* g);

int rct_digraph_order(const rct_digraph* g);
int rct_digraph_arc_count(const rct_digraph* g);
rct_status rct_is_tournament(const rct_digraph* g, int* out);
rct_status rct_is_strong(const rct_digraph* g, int* out);

/* ---- colored digraphs ---- */

/* The built-in 2-colored tournament of order n >= 6 whose every ordered
 * vertex pair is joined by a rainbow path. */
rct_status rct_construction(int order, rct_colored** out);
rct_status rct_colored_from_json(const char* json, rct_colored** out);
rct_status rct_colored_to_json(const rct_colored* cd, char** out_json);
void rct_colored_free(rct_colored* cd);

/* ---- rainbow checks and the exact solver ---- */

/* *connected = 1: detail is the full per-pair certificate array.
 * *connected = 0: detail is {"connected": false, "failing_pair": [u, v]}. */
rct_status rct_check_rainbow(const rct_colored* cd, int* connected,
                             char** detail_json);

/* Exact rainbow connection number; max_colors = 0 means unbounded (up to
 * the solver palette cap), threads = 0 means all cores. */
rct_status rct_solve_rc(const rct_digraph* g, int max_colors, int threads,
                        char** result_json);

/* Closed-form witness paths for the built-in construction of order n;
 * emits {"n": ..., "entries": [...], "notes": [...]}. */
rct_status rct_proof_certificate(int order, char** certificate_json);

/* certificate_json: entry array or {"entries": [...]}. *ok = 1 iff zero
 * violations and full ordered-pair coverage. */
rct_status rct_validate_certificate(const rct_colored* cd,
                                    const char* certificate_json, int* ok,
                                    char** report_json);

/* ---- catalog verifications (JSON report + pass flag) ---- */

rct_status rct_verify_theorem3(int n_max, int threads, int* ok,
                               char** report_json);
rct_status rct_verify_small_cases(int threads, int* ok, char** report_json);
rct_status rct_verify_band(int order, int samples, int exhaustive,
                           uint64_t seed, int threads, int* ok,
                           char** report_json);
rct_status rct_search_spectrum(int order, int budget, uint64_t seed,
                               int threads, int* ok, char** report_json);

/* Human-readable rendering of any report emitted above. */
rct_status rct_report_text(const char* report_json, char** text);

/* ---- export ---- */

/* Accepts digraph or colored-digraph JSON; colored input renders color 0
 * dashed and color 1 solid. */
rct_status rct_export_dot(const char* json, char** dot_text);

#ifdef __cplusplus
}
#endif

#endif /* RCTOUR_H */
