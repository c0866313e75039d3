/*
 * geulerian — exact Eulerian-number combinatorics behind a C interface.
 *
 * Everything is driven through an opaque context handle that carries the
 * enumeration cap and the memo caches. Functions return GEU_OK (0) or an
 * error code; geu_ctx_error_message() describes the most recent failure on
 * the handle. Values that can outgrow machine words travel as malloc'd
 * decimal strings; release every returned string with geu_string_free().
 */

#ifndef GEULERIAN_H
#define GEULERIAN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(GEU_BUILDING_SHARED)
#define GEU_API __attribute__((visibility("default")))
#else
#define GEU_API
#endif

typedef struct geu_ctx geu_ctx;

enum {
  GEU_OK = 0,
  GEU_ERR_INVALID_ARGUMENT = 1,
  GEU_ERR_EMPTY_WORD = 2,
  GEU_ERR_DUPLICATE_VALUE = 3,
  GEU_ERR_VALUE_OUT_OF_RANGE = 4,
  GEU_ERR_CAP_EXCEEDED = 5,
  GEU_ERR_INVALID_POSITION = 6,
  GEU_ERR_NO_MATCHING_ROW = 7,
  GEU_ERR_UNCLASSIFIABLE = 8,
  GEU_ERR_NOMEM = 9,
  GEU_ERR_INTERNAL = 10
};

enum { GEU_FORMAT_PLAIN = 0, GEU_FORMAT_CSV = 1, GEU_FORMAT_JSON = 2 };

enum { GEU_SIDE_A = 0, GEU_SIDE_B = 1 };

GEU_API const char* geu_version(void);

/* ---- context ---------------------------------------------------------- */

GEU_API geu_ctx* geu_ctx_new(void);
GEU_API void geu_ctx_free(geu_ctx* ctx);

/* Exhaustive enumeration refuses n above this cap (default 12). */
GEU_API int geu_ctx_set_enum_cap(geu_ctx* ctx, int cap);
GEU_API int geu_ctx_enum_cap(const geu_ctx* ctx);

/* Message for the most recent error on this handle; valid until the next
 * call on the same handle. */
GEU_API const char* geu_ctx_error_message(const geu_ctx* ctx);

GEU_API void geu_string_free(char* s);

/* ---- permutation statistics ------------------------------------------- */

typedef struct geu_perm_stats {
  int n;
  int ascents;
  int weak_excedances;
  long long maj;
  int q_position; /* the position holding the value n */
} geu_perm_stats;

/* word is 1-based values p_1..p_n packed into word[0..n-1]. */
GEU_API int geu_permutation_stats(geu_ctx* ctx, const int* word, int n, geu_perm_stats* out);

/* Standard cycle representation, e.g. "(2)(43)(7615)". */
GEU_API int geu_cycle_form(geu_ctx* ctx, const int* word, int n, char** out);

/* out_word must hold n entries. */
GEU_API int geu_fundamental_map(geu_ctx* ctx, const int* word, int n, int* out_word);
GEU_API int geu_fundamental_inverse(geu_ctx* ctx, const int* word, int n, int* out_word);
GEU_API int geu_complement(geu_ctx* ctx, const int* word, int n, int* out_word);

/* Parses "5243716", "5,2,4,3,7,1,6" or "5 2 4 3 7 1 6" and validates it.
 * Fails with GEU_ERR_INVALID_ARGUMENT when capacity is too small. */
GEU_API int geu_parse_word(geu_ctx* ctx, const char* text, int* out_word, int capacity,
                           int* out_n);

/* ---- exact values ------------------------------------------------------ */

/* Eulerian number A(n,k) (number of n-permutations with k weak excedances):
 * closed form and recurrence respectively. */
GEU_API int geu_eulerian(geu_ctx* ctx, int n, int k, char** out);
GEU_API int geu_eulerian_recurrence(geu_ctx* ctx, int n, int k, char** out);

/* General Eulerian number A(n,k;a,d) for the progression a, a+d, a+2d, ...;
 * a and d are decimal strings and may be negative or zero. */
GEU_API int geu_general_eulerian(geu_ctx* ctx, int n, int k, const char* a, const char* d,
                                 char** out);

/* Homogeneous-expansion coefficient c_{n,k}(j). */
GEU_API int geu_cnk(geu_ctx* ctx, int n, int k, int j, char** out);

/* a(n,k,i): n-permutations with k ascents and major index i (enumeration). */
GEU_API int geu_a_stat(geu_ctx* ctx, int n, int k, long long i, char** out);

/* q-Eulerian polynomial as JSON: {"terms": [[exponent, "coefficient"], ...]}. */
GEU_API int geu_q_eulerian(geu_ctx* ctx, int n, int k, char** json_out);

/* ---- enumeration oracles ----------------------------------------------- */

GEU_API int geu_count_weak_excedance_class(geu_ctx* ctx, int n, int k, char** out);
GEU_API int geu_count_w_with_q(geu_ctx* ctx, int n, int k, int lo, int hi, char** out);

/* Bar-arrangement count |B| by filtering, and by inclusion-exclusion. */
GEU_API int geu_count_set_b(geu_ctx* ctx, int n, int k, int j, char** out);
GEU_API int geu_inclusion_exclusion_b(geu_ctx* ctx, int n, int k, int j, char** out);

/* Extraneous bars of an arrangement given as k+1 compartment sizes and the
 * concatenated values. out_bars must hold k entries; *out_count receives the
 * number of extraneous bars (1-based indices, ascending). */
GEU_API int geu_extraneous_bars(geu_ctx* ctx, int n, int k, const int* compartment_sizes,
                                const int* values, int* out_bars, int* out_count);

/* ---- theorem checks (1 = holds, 0 = fails) ------------------------------ */

GEU_API int geu_verify_main_theorem(geu_ctx* ctx, int n, int k, int j, int* holds);
GEU_API int geu_remark_identity(geu_ctx* ctx, int n, int k, int j, int* holds);
GEU_API int geu_lemma_bijection(geu_ctx* ctx, int n, int k, int j, int* holds);
GEU_API int geu_verify_cnk_aw_bw(geu_ctx* ctx, int n, int k, int* holds);
GEU_API int geu_verify_aw_bw_symmetry(geu_ctx* ctx, int n, int k, int* holds);
GEU_API int geu_verify_insertion(geu_ctx* ctx, int n, int k, int side, int* holds);

/* ---- rendered reports (CLI surface) ------------------------------------ */

/* kind: "eulerian" | "general" | "cnk". Pass 0 for unset n/max_n, -1 for
 * unset k/j, NULL for unset a/d. */
GEU_API int geu_render_table(geu_ctx* ctx, const char* kind, int n, int max_n, int k, int j,
                             const char* a, const char* d, int format, char** out);

GEU_API int geu_render_stats(geu_ctx* ctx, const int* word, int n, int format, char** out);

GEU_API int geu_render_bijection(geu_ctx* ctx, int side, int n, int k, int format, char** out);

/* suite: one of the verify suites or "all"; max_n <= 0 selects the per-suite
 * default. *all_passed is 1 when every cell passed. */
GEU_API int geu_run_verify(geu_ctx* ctx, const char* suite, int max_n, int format,
                           char** report, int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GEULERIAN_H */
