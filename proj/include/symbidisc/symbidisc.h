#ifndef SYMBIDISC_H
#define SYMBIDISC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque evaluation context: holds tolerances and the last error message. */
typedef struct sbd_context sbd_context;

typedef enum sbd_status {
  SBD_OK = 0,
  SBD_ERR_INVALID_ARGUMENT = 1,
  SBD_ERR_INVALID_PARAMETER = 2,
  SBD_ERR_INVALID_CONDITION = 3,
  SBD_ERR_DEGENERATE_COEFFICIENT = 4,
  SBD_ERR_BRANCH_CUT = 5,
  SBD_ERR_OUTSIDE_DOMAIN = 6,
  SBD_ERR_BOUNDARY_UNDECIDABLE = 7,
  SBD_ERR_SINGULAR_DENOMINATOR = 8,
  SBD_ERR_LEAF_MISMATCH = 9,
  SBD_ERR_DISTANCE_MISMATCH = 10,
  SBD_ERR_DEGENERATE_LEAF = 11,
  SBD_ERR_OFF_LEAF = 12,
  SBD_ERR_VANISHING_GRADIENT = 13,
  SBD_ERR_DIAGONAL_POINT = 14,
  SBD_ERR_ZERO_VECTOR = 15,
  SBD_ERR_ZERO_CHART_COORDINATE = 16,
  SBD_ERR_UNKNOWN_SUITE = 17,
  SBD_ERR_IO = 18,
  SBD_ERR_INTERNAL = 19
} sbd_status;

typedef enum sbd_region {
  SBD_REGION_OUTSIDE = -1,
  SBD_REGION_BOUNDARY = 0,
  SBD_REGION_INSIDE = 1
} sbd_region;

typedef struct sbd_complex {
  double re;
  double im;
} sbd_complex;

typedef struct sbd_tolerances {
  double eq_tol;        /* relative equality tolerance */
  double boundary_band; /* half-width of the Boundary classification band */
  double fd_step;       /* finite-difference step */
} sbd_tolerances;

typedef enum sbd_domain {
  SBD_DOMAIN_G = 0,      /* coords (s, p) */
  SBD_DOMAIN_D1 = 1,     /* coords (z1, z2) */
  SBD_DOMAIN_DS = 2,     /* coords (z1, z2), params {s}, s >= 1 */
  SBD_DOMAIN_DST = 3,    /* coords (z1, z2), params {s, t}, 1 <= s < t (t may be INFINITY) */
  SBD_DOMAIN_DC = 4,     /* coords (z1, z2), params {c}, c > 1 */
  SBD_DOMAIN_GC = 5,     /* coords (s, p), params {c}, c > 1 */
  SBD_DOMAIN_OMEGA1 = 6, /* coords (u, v) */
  SBD_DOMAIN_D21 = 7     /* coords: 4 homogeneous */
} sbd_domain;

typedef enum sbd_map {
  SBD_MAP_F = 0,          /* 2 -> 2 */
  SBD_MAP_FINV = 1,       /* 2 -> 2 */
  SBD_MAP_H = 2,          /* 2 -> 2 */
  SBD_MAP_HINV = 3,       /* 2 -> 2 */
  SBD_MAP_J = 4,          /* 2 -> 4 */
  SBD_MAP_JINV = 5,       /* 4 -> 2 */
  SBD_MAP_SYM = 6,        /* 2 -> 2 */
  SBD_MAP_SYMINV = 7,     /* 2 -> 2 */
  SBD_MAP_SYM_OMEGA1 = 8, /* 2 -> 2 */
  SBD_MAP_SYM_D21 = 9     /* 4 -> 2 */
} sbd_map;

typedef struct sbd_levi_report {
  sbd_complex z1, z2;
  double leaf_a;
  sbd_complex grad1, grad2;
  sbd_complex m11, m12, m21, m22;
  sbd_complex tangent;
  double levi_value;
  double closed_form_value;
} sbd_levi_report;

typedef struct sbd_suite_result {
  char suite_name[64];
  uint64_t n_samples;
  uint64_t n_skipped_boundary;
  double max_violation;
  int pass;
  uint64_t seed;
  double elapsed_seconds;
} sbd_suite_result;

/* ---- context ------------------------------------------------------- */

sbd_tolerances sbd_default_tolerances(void);

/* tolerances == NULL uses the defaults. Returns NULL on invalid tolerances. */
sbd_context* sbd_context_create(const sbd_tolerances* tolerances);
void sbd_context_destroy(sbd_context* ctx);

sbd_status sbd_context_last_status(const sbd_context* ctx);
/* Message for the last failing call; valid until the next call on ctx. */
const char* sbd_context_last_message(const sbd_context* ctx);
const char* sbd_status_name(sbd_status status);

/* ---- membership ------------------------------------------------------ */

/* condition 0 selects the defining characterization; the nine-way domains
 * (G, D1) also accept 1..9. params carries the family parameters listed on
 * sbd_domain, in order. */
sbd_status sbd_membership(sbd_context* ctx, sbd_domain domain,
                          const sbd_complex* coords, size_t n_coords,
                          int condition, const double* params, size_t n_params,
                          sbd_region* out_region, double* out_margin);

/* ---- maps ------------------------------------------------------------ */

sbd_status sbd_map_arity(sbd_map map, size_t* out_n_in, size_t* out_n_out);
sbd_status sbd_map_apply(sbd_context* ctx, sbd_map map, const sbd_complex* in,
                         size_t n_in, sbd_complex* out, size_t n_out);

/* ---- leaf structure -------------------------------------------------- */

sbd_status sbd_leaf_index(sbd_context* ctx, sbd_complex s, sbd_complex p,
                          double* out_q);
sbd_status sbd_reindex_a_to_b(double a, double* out_b);
sbd_status sbd_reindex_b_to_a(double b, double* out_a);

/* phi_{theta,alpha}(z) = e^{i theta} (z - alpha) / (1 - conj(alpha) z) */
sbd_status sbd_disc_apply(double theta, sbd_complex alpha, sbd_complex z,
                          sbd_complex* out);

sbd_status sbd_levi_report_at(sbd_context* ctx, sbd_complex z1, sbd_complex z2,
                              double a, sbd_levi_report* out);

/* ---- sampling (splitmix64 streams; see README for the algorithm) ----- */

sbd_status sbd_sample_g(sbd_context* ctx, uint64_t seed, uint64_t index,
                        sbd_complex* out_s, sbd_complex* out_p);
sbd_status sbd_sample_leaf(sbd_context* ctx, double a, uint64_t seed,
                           uint64_t index, sbd_complex* out_s,
                           sbd_complex* out_p);

/* ---- verification ---------------------------------------------------- */

size_t sbd_suite_count(void);
/* NULL if index is out of range. */
const char* sbd_suite_name(size_t index);
uint64_t sbd_suite_default_samples(size_t index);
double sbd_suite_tolerance(size_t index);

/* n_samples == 0 runs the suite's default count. */
sbd_status sbd_verify_run(sbd_context* ctx, const char* suite_name,
                          uint64_t n_samples, uint64_t seed,
                          sbd_suite_result* out);

/* Canonical single-line JSON certificate (no trailing newline). Writes the
 * required size including the terminator to *out_needed when non-NULL;
 * fails with SBD_ERR_INVALID_ARGUMENT if buf_size is insufficient. */
sbd_status sbd_suite_result_to_json(const sbd_suite_result* result, char* buf,
                                    size_t buf_size, size_t* out_needed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SYMBIDISC_H */
