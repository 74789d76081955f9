/*
 * hnpoly - exact Harder-Narasimhan polygon calculus for vector bundles on
 * the Fargues-Fontaine curve.
 *
 * C API over an opaque bundle handle.  All functions returning hnp_status
 * report failures through the status code; hnp_last_error() gives a
 * human-readable message for the most recent failure on the calling thread.
 * Strings returned through char** are heap-allocated; release them with
 * hnp_string_free.  Handles returned through hnp_bundle** are released with
 * hnp_bundle_free.
 *
 * A bundle is identified with its Harder-Narasimhan decomposition
 * O(a1)^m1 + ... + O(ak)^mk, slopes strictly decreasing.  O(r/s), for r/s in
 * lowest terms with s > 0, is the stable bundle of rank s and degree r.
 * All arithmetic is exact; computations that would overflow 64-bit
 * intermediates fail with HNP_ERROR_OVERFLOW.
 */

#ifndef HNPOLY_H
#define HNPOLY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hnp_bundle hnp_bundle;

typedef enum hnp_status {
  HNP_OK = 0,
  HNP_ERROR_INVALID = 1,  /* domain/precondition violation */
  HNP_ERROR_PARSE = 2,    /* malformed bundle expression */
  HNP_ERROR_OVERFLOW = 3, /* exact arithmetic would overflow */
  HNP_ERROR_NOMEM = 4
} hnp_status;

const char* hnp_last_error(void);
void hnp_string_free(char* s);

/* --- construction ------------------------------------------------------ */

/* Grammar: "0" or terms "O(num[/den])[^mult]" joined with "+".
 * Non-canonical input is canonicalized.  On parse errors the message from
 * hnp_last_error() includes the byte offset. */
hnp_status hnp_bundle_parse(const char* text, hnp_bundle** out);
hnp_status hnp_bundle_zero(hnp_bundle** out);
/* n factors O(slope_num[i]/slope_den[i])^mult[i]; merged and sorted. */
hnp_status hnp_bundle_from_factors(size_t n, const int64_t* slope_num,
                                   const int64_t* slope_den, const int64_t* mult,
                                   hnp_bundle** out);
void hnp_bundle_free(hnp_bundle* b);

/* --- queries ------------------------------------------------------------ */

int64_t hnp_rank(const hnp_bundle* b);
int64_t hnp_degree(const hnp_bundle* b);
int hnp_is_zero(const hnp_bundle* b);
int hnp_is_semistable(const hnp_bundle* b);
int hnp_equal(const hnp_bundle* a, const hnp_bundle* b);
/* reject the zero bundle */
hnp_status hnp_mu(const hnp_bundle* b, int64_t* num, int64_t* den);
hnp_status hnp_mu_min(const hnp_bundle* b, int64_t* num, int64_t* den);
hnp_status hnp_mu_max(const hnp_bundle* b, int64_t* num, int64_t* den);
size_t hnp_factor_count(const hnp_bundle* b);
hnp_status hnp_factor(const hnp_bundle* b, size_t i, int64_t* slope_num,
                      int64_t* slope_den, int64_t* mult);
/* slope of the HN polygon on [i-1, i], 1 <= i <= rank */
hnp_status hnp_slope_on_interval(const hnp_bundle* b, int64_t i, int64_t* num, int64_t* den);
hnp_status hnp_format(const hnp_bundle* b, char** out);
/* {"factors":[{"mult":int,"slope":{"den":int,"num":int}}]} */
hnp_status hnp_to_json(const hnp_bundle* b, char** out);

/* --- operations --------------------------------------------------------- */

hnp_status hnp_dual(const hnp_bundle* b, hnp_bundle** out);
hnp_status hnp_direct_sum(const hnp_bundle* a, const hnp_bundle* b, hnp_bundle** out);
hnp_status hnp_tensor(const hnp_bundle* a, const hnp_bundle* b, hnp_bundle** out);
hnp_status hnp_twist(const hnp_bundle* b, int64_t num, int64_t den, hnp_bundle** out);
hnp_status hnp_stretch(const hnp_bundle* b, int64_t factor, hnp_bundle** out);

typedef enum hnp_slice_mode {
  HNP_SLICE_LE = 0,
  HNP_SLICE_LT = 1,
  HNP_SLICE_GE = 2,
  HNP_SLICE_GT = 3
} hnp_slice_mode;

hnp_status hnp_slice(const hnp_bundle* b, int64_t num, int64_t den, hnp_slice_mode mode,
                     hnp_bundle** out);

/* --- degree pairings and vanishing -------------------------------------- */

/* deg(V^dual (x) W) and its nonnegative part deg(V^dual (x) W)^{>=0} */
hnp_status hnp_deg_pair(const hnp_bundle* v, const hnp_bundle* w, int64_t* out);
hnp_status hnp_deg_pair_nonneg(const hnp_bundle* v, const hnp_bundle* w, int64_t* out);
int hnp_hom_is_zero(const hnp_bundle* v, const hnp_bundle* w);
hnp_status hnp_hom_moduli_dim(const hnp_bundle* v, const hnp_bundle* w, int64_t* out);
/* h0_is_zero iff lambda < 0; h1_is_zero guaranteed for lambda >= 0 only */
hnp_status hnp_cohomology_vanishing(int64_t num, int64_t den, int* h0_is_zero,
                                    int* h1_is_zero);
hnp_status hnp_ext1_vanishes_sufficient(const hnp_bundle* v, const hnp_bundle* w, int* out);

/* --- slopewise dominance ------------------------------------------------ */

int hnp_slopewise_dominates(const hnp_bundle* v, const hnp_bundle* w);
int hnp_dominates_via_ranks(const hnp_bundle* v, const hnp_bundle* w);
/* requires dominance; V = U + V', W = U + W' with U the maximal common part */
hnp_status hnp_common_factor_decompose(const hnp_bundle* v, const hnp_bundle* w,
                                       hnp_bundle** common, hnp_bundle** v_rest,
                                       hnp_bundle** w_rest);
/* requires equal ranks */
hnp_status hnp_equal_rank_duality_holds(const hnp_bundle* v, const hnp_bundle* w, int* out);

/* --- classification ----------------------------------------------------- */

typedef enum hnp_fail_condition {
  HNP_FAIL_NONE = 0,
  HNP_FAIL_RANK_INEQUALITY = 1,
  HNP_FAIL_EQUALITY_CASE = 2,
  HNP_FAIL_POLYGON_SLOPE = 3,
  HNP_FAIL_POLYGON_VERTEX = 4
} hnp_fail_condition;

/* answer != 0 iff yes; otherwise witness (when has_witness) names a slope
 * where the failed condition broke. */
typedef struct hnp_verdict {
  int answer;
  int has_witness;
  int64_t witness_num;
  int64_t witness_den;
  hnp_fail_condition failed;
} hnp_verdict;

hnp_status hnp_is_quotient(const hnp_bundle* e, const hnp_bundle* f, hnp_verdict* out);
hnp_status hnp_is_quotient_polygonal(const hnp_bundle* e, const hnp_bundle* f,
                                     hnp_verdict* out);
/* sufficient only: a false verdict is inconclusive */
hnp_status hnp_subbundle_sufficient(const hnp_bundle* e, const hnp_bundle* d,
                                    hnp_verdict* out);
/* necessary, conjecturally sufficient: not a proof of embeddability */
int hnp_subbundle_necessary(const hnp_bundle* e, const hnp_bundle* d);
hnp_status hnp_is_globally_generated(const hnp_bundle* f, int64_t n, int* out);

/* --- slope reduction machinery ------------------------------------------ */

hnp_status hnp_c_value(const hnp_bundle* e, const hnp_bundle* f, const hnp_bundle* q,
                       int64_t* out);
/* requires nonzero bundles, integer slopes, V dominating W */
hnp_status hnp_max_slope_reduction(const hnp_bundle* v, const hnp_bundle* w,
                                   hnp_bundle** out);

typedef struct hnp_key_inequality_report {
  int64_t c;
  int hypotheses_ok;
  int violated_hypothesis; /* 0 = none, 1..4 = first violated hypothesis */
  int equality_consistent; /* (c == 0) <=> (F = Q) on this instance */
} hnp_key_inequality_report;

hnp_status hnp_key_inequality_check(const hnp_bundle* e, const hnp_bundle* f,
                                    const hnp_bundle* q, hnp_key_inequality_report* out);

/* Runs the slope reduction sequence.  trace_json (optional) receives
 * {"steps":[{"c":int,"f":Bundle,"u":Bundle}],"terminated":bool}; final
 * (optional) receives the last bundle of the sequence.  Requires F, Q
 * nonzero of equal rank, integer slopes, F dominating Q. */
hnp_status hnp_slope_reduction(const hnp_bundle* e, const hnp_bundle* f,
                               const hnp_bundle* q, char** trace_json, size_t* num_steps,
                               int* terminated, hnp_bundle** final_bundle);

/* --- exhaustive verification -------------------------------------------- */

typedef struct hnp_enum_bounds {
  int64_t max_rank;
  int64_t max_abs_degree;
  int64_t max_denominator;
  int include_zero;
} hnp_enum_bounds;

/* number of bundles the bounds enumerate */
hnp_status hnp_enumerate_count(const hnp_enum_bounds* bounds, int64_t* count);

/* Runs every property over the bounds with `jobs` workers.  report_json
 * (optional) receives {"properties":{name:{"checked":int,"failures":[...]}}};
 * all_pass is 1 when no property produced a counterexample.  Memory
 * exhaustion returns HNP_ERROR_NOMEM, distinct from property failure. */
hnp_status hnp_run_property_suite(const hnp_enum_bounds* bounds, int jobs,
                                  char** report_json, int* all_pass);

/* --- rendering ----------------------------------------------------------- */

/* SVG 1.1 document showing the HN polygons, left endpoints at the origin or
 * right endpoints when align_right. */
hnp_status hnp_render_svg(const hnp_bundle* const* bundles, size_t n, int align_right,
                          char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* HNPOLY_H */
