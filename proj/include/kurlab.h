/* kurlab C API: closure/interior operator words over chains of topologies.
 *
 * Conventions:
 *   - every char** output receives a malloc'd NUL-terminated string; release
 *     it with kur_string_free
 *   - outputs are written on KUR_OK and KUR_CHECK_FAILED; on errors they are
 *     left untouched and kur_last_error() describes the failure
 *   - word syntax: whitespace-separated tokens i<j>, k<j>, 1, plus a leading c
 *     where a complement prefix is meaningful
 */
#ifndef KURLAB_H
#define KURLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kur_status {
  KUR_OK = 0,
  KUR_CHECK_FAILED = 1, /* the requested verification ran and does not hold */
  KUR_ERR_INPUT = 2,
  KUR_ERR_LIMIT = 3,
  KUR_ERR_INTERNAL = 4
} kur_status;

const char* kur_version(void);

/* Message for the calling thread's most recent failure. */
const char* kur_last_error(void);
void kur_string_free(char* s);

/* ---- exact counting ---- */

/* K(n,p) as a decimal string. */
kur_status kur_count(unsigned n, unsigned p, char** out);
/* CSV grid, rows n = 0..max_n, columns p = 0..max_p, header row/column. */
kur_status kur_count_grid(unsigned max_n, unsigned max_p, char** out_csv);
/* Two CSV rows K and 2K for n = 0..max_n. */
kur_status kur_count_diagonal(unsigned max_n, char** out_csv);
/* {"vmp","vpm","wplus","wminus","total"} as decimal strings. */
kur_status kur_family_counts(unsigned n, unsigned p, char** out_json);
/* K(n,n)/binom(2n,n)^2 as an exact fraction string. */
kur_status kur_growth_ratio(unsigned n, char** out);
/* Exact check 9 K(m,m) <= 16 binom(2m,m)^2 for all m <= max_n. */
kur_status kur_verify_sup_bound(unsigned max_n, int* out_holds, unsigned* out_first_violation);
/* K(n,n)*9*n/16^(n+1) as an exact fraction string. */
kur_status kur_stirling_ratio(unsigned n, char** out);
/* Combined report; with_stirling adds the ratio-times-pi bracket at stirling_n. */
kur_status kur_asympt_report(unsigned max_n, int with_stirling, unsigned stirling_n,
                             char** out_json);

/* ---- words ---- */

/* All structured words over the chain (n,p); doubled with complement prefixes
 * when full != 0.  as_json selects a JSON string array over line-based text.
 * max_each caps n and p (pass 0 for the default of 6). */
kur_status kur_enumerate(unsigned n, unsigned p, int full, unsigned max_each, int as_json,
                         char** out);
kur_status kur_normalize(unsigned n, unsigned p, const char* word, char** out);
kur_status kur_words_equal(unsigned n, unsigned p, const char* u, const char* v, int* out_equal);
/* {"alternating":bool,"family":"single|vmp|vpm|wminus|wplus"|null,"pivot":m} */
kur_status kur_classify(unsigned n, unsigned p, const char* word, char** out_json);

/* ---- free monoid over a chain ---- */

typedef struct kur_monoid kur_monoid;

/* max_elements == 0 selects the default cap of 10000. */
kur_status kur_monoid_build(unsigned n, unsigned p, size_t max_elements, kur_monoid** out);
void kur_monoid_free(kur_monoid* m);
size_t kur_monoid_size(const kur_monoid* m);
kur_status kur_monoid_element(const kur_monoid* m, size_t index, char** out);
kur_status kur_monoid_idempotent(const kur_monoid* m, int* out_ok);
kur_status kur_monoid_hasse_dot(kur_monoid* m, char** out_dot);
kur_status kur_monoid_json(kur_monoid* m, char** out_json);

/* ---- finite spaces ---- */

typedef struct kur_space kur_space;

/* {"ground": ["x","y"], "topologies": [[[],["x"],["x","y"]], ...]};
 * ground_cap == 0 selects the default cap of 6. */
kur_status kur_space_parse(const char* json, unsigned ground_cap, kur_space** out);
void kur_space_free(kur_space* s);
/* Generated-monoid report: {"size", "chain_length", "with_complement",
 * "witnesses"}.  max_size == 0 selects the default cap of 20000. */
kur_status kur_space_monoid_report(const kur_space* s, int with_complement, size_t max_size,
                                   char** out_json);
/* |<gens>| against K(n) (2K(n) with complement); KUR_CHECK_FAILED if violated. */
kur_status kur_space_verify_bound(const kur_space* s, int with_complement, size_t max_size,
                                  char** out_json);
kur_status kur_space_saturated(const kur_space* s, int* out_saturated);
/* Requires a saturated space; |<gens>| against 1+6*chain_length. */
kur_status kur_space_saturated_bound(const kur_space* s, size_t max_size, char** out_json);

/* ---- witness certification ---- */

/* Separates every ordered pair of distinct full words over the degree-n star
 * chain on per-pair finite components; the report carries the certified counts
 * {"n","kuratowski_count","full_count","pairs_checked","case_histogram"}. */
kur_status kur_witness_certify(unsigned n, char** out_json);

/* ---- exploratory search ---- */

/* Largest closure-orbit over incomparable topology pairs; exhaustive for
 * ground <= 3, randomized within budget otherwise. */
kur_status kur_search_incomparable(unsigned ground, unsigned long long budget,
                                   unsigned long long seed, unsigned ground_cap, char** out_json);

/* ---- separation by the four collapse morphisms ---- */

/* KUR_CHECK_FAILED unless the 63 image quadruples are pairwise distinct and
 * match the frozen reference tables. */
kur_status kur_quadruple_check(char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KURLAB_H */
