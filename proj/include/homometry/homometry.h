/* C API for the homometry library: counting, classification and brute-force
 * enumeration of nontrivial homometry classes of 5-bead binary bracelets,
 * minimal difference-table searches, intersection reports, and verification
 * sweeps. All results are returned as heap strings (JSON, JSON lines, CSV or
 * plain text) released with hmt_string_free. Functions return HMT_OK or an
 * error code; the per-context message is read with hmt_last_error. */
#ifndef HOMOMETRY_H
#define HOMOMETRY_H

#include <stdint.h>

#if defined(_WIN32)
#define HMT_API
#else
#define HMT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hmt_status {
  HMT_OK = 0,
  HMT_ERROR_INVALID_ARGUMENT = 1, /* bad parameter value */
  HMT_ERROR_IO = 2,               /* checkpoint file unreadable/unwritable */
  HMT_ERROR_INTERNAL = 3          /* invariant violation; please report */
} hmt_status;

/* Opaque handle owning the last-error message of its calls. Not thread-safe;
 * use one context per thread. */
typedef struct hmt_context hmt_context;

HMT_API hmt_context* hmt_context_new(void);
HMT_API void hmt_context_free(hmt_context* ctx);

/* Message of the most recent failing call on ctx; empty string if none.
 * Owned by the context, valid until the next call on it. */
HMT_API const char* hmt_last_error(const hmt_context* ctx);

HMT_API const char* hmt_version(void);

/* Frees any string returned through a char** out parameter. */
HMT_API void hmt_string_free(char* s);

/* ---- counting ---------------------------------------------------------- */

/* Number of nontrivial homometry classes at length n, as a decimal string. */
HMT_API hmt_status hmt_count(hmt_context* ctx, uint64_t n, char** out_count);

/* Pair classes (two bracelets) and triple classes (three bracelets). */
HMT_API hmt_status hmt_count_refined(hmt_context* ctx, uint64_t n,
                                     char** out_pairs, char** out_triples);

/* CSV over [n_lo, n_hi]: header "n,h_n" plus optional refined and per-type
 * columns. */
HMT_API hmt_status hmt_count_csv(hmt_context* ctx, uint64_t n_lo, uint64_t n_hi,
                                 int refined, int by_type, char** out_csv);

/* The closed-form class-count series, human readable. */
HMT_API hmt_status hmt_gf_text(hmt_context* ctx, char** out_text);

/* ---- classes ----------------------------------------------------------- */

/* Iterator yielding one JSON line per class. */
typedef struct hmt_class_iter hmt_class_iter;

/* Typed classes at length n, ordered by (type, parameters). */
HMT_API hmt_status hmt_classify_begin(hmt_context* ctx, uint64_t n,
                                      hmt_class_iter** out_iter);

/* Brute-force classes at length n (independent of the typed formulas),
 * ordered by shared distance multiset. threads = 0 picks the hardware
 * concurrency. */
HMT_API hmt_status hmt_oracle_begin(hmt_context* ctx, uint64_t n,
                                    unsigned threads, hmt_class_iter** out_iter);

/* *out_line = next JSON line (caller frees), or NULL when exhausted. */
HMT_API hmt_status hmt_class_iter_next(hmt_context* ctx, hmt_class_iter* iter,
                                       char** out_line);
HMT_API void hmt_class_iter_free(hmt_class_iter* iter);

/* ---- minimal difference tables ----------------------------------------- */

/* Antichain of minimal difference tables for long counts (p, q), as a JSON
 * document. full != 0 walks all 10! permutations in rank order (honoring
 * checkpoint_path for resumable progress saved every checkpoint_every
 * permutations); otherwise processes the reference tables followed by
 * sample_count seeded pseudo-random permutations. dump_cells != 0 adds the
 * solution cells and their parametrizations to each antichain entry. */
HMT_API hmt_status hmt_minimal_tables(hmt_context* ctx, int p, int q, int full,
                                      uint64_t sample_count, uint64_t seed,
                                      const char* checkpoint_path,
                                      uint64_t checkpoint_every, unsigned threads,
                                      int dump_cells, char** out_json);

/* Pairwise/triple intersection report of the reference minimal tables. */
HMT_API hmt_status hmt_intersections(hmt_context* ctx, char** out_json);

/* ---- verification ------------------------------------------------------ */

/* Brute force vs typed classes vs series coefficients over [n_lo, n_hi].
 * *out_ok = 1 when everything agreed. */
HMT_API hmt_status hmt_cross_check(hmt_context* ctx, uint64_t n_lo, uint64_t n_hi,
                                   unsigned threads, char** out_json, int* out_ok);

/* Long-count pairs of all class members up to n_max against the five
 * admissible pairs. */
HMT_API hmt_status hmt_long_counts(hmt_context* ctx, uint64_t n_max,
                                   unsigned threads, char** out_json, int* out_ok);

/* Unit-multiplication experiment up to n_max; *out_ok = 0 reports a type
 * letter change. */
HMT_API hmt_status hmt_un_action(hmt_context* ctx, uint64_t n_max,
                                 char** out_json, int* out_ok);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HOMOMETRY_H */
