/*
 * Copyright 2026 The maxspec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libmaxspec: spectral enclosures, resolvent estimates,
 * essential spectra and waveguide eigenvalues of the Maxwell pencil.
 *
 * Every function returns a maxspec_status. On failure the message is
 * available from maxspec_last_error() on the same thread. Strings returned
 * through char** are owned by the caller and freed with maxspec_string_free.
 * Handles are freed with their *_destroy function; destroying NULL is a no-op.
 */

#ifndef MAXSPEC_MAXSPEC_H
#define MAXSPEC_MAXSPEC_H

#include <stddef.h>

#if defined(_WIN32)
#define MAXSPEC_API __declspec(dllexport)
#else
#define MAXSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum maxspec_status {
  MAXSPEC_OK = 0,
  MAXSPEC_INVALID_ARGUMENT = 1,
  MAXSPEC_POLE_PROXIMITY = 2,
  MAXSPEC_BOUNDARY_HIT = 3,
  MAXSPEC_NON_CONVERGENCE = 4,
  MAXSPEC_EMPTY_RANGE = 5,
  MAXSPEC_QUADRATURE_FAILURE = 6,
  MAXSPEC_NO_QUALIFYING_ROOTS = 7,
  MAXSPEC_INTERNAL_ERROR = 99
} maxspec_status;

typedef struct maxspec_complex {
  double re;
  double im;
} maxspec_complex;

typedef struct maxspec_rect {
  double re_lo, re_hi, im_lo, im_hi;
} maxspec_rect;

MAXSPEC_API const char* maxspec_version(void);
MAXSPEC_API const char* maxspec_status_name(maxspec_status status);
/* Message of the last failed call on this thread; "" if none. */
MAXSPEC_API const char* maxspec_last_error(void);
MAXSPEC_API void maxspec_string_free(char* s);

/* ---- Material bounds, enclosure, resolvent ---------------------------- */

typedef struct maxspec_bounds {
  double eps_min, eps_max;
  double mu_min, mu_max;
  double sigma_min, sigma_max;
  double lambda_min;   /* bottom of the spectrum of curl curl_0 */
  double lambda_e_min; /* bottom of its essential spectrum */
} maxspec_bounds;

typedef enum maxspec_threshold_case {
  MAXSPEC_BELOW_I = 0,
  MAXSPEC_CASE_I = 1,
  MAXSPEC_CASE_II = 2,
  MAXSPEC_CASE_III = 3
} maxspec_threshold_case;

/* eps = mu = 1, sigma = 0, lambda_min = lambda_e_min = 0. */
MAXSPEC_API maxspec_bounds maxspec_bounds_default(void);
MAXSPEC_API maxspec_status maxspec_enclosure_contains(maxspec_complex w, const maxspec_bounds* b,
                                                      double boundary_tol, int* inside);
MAXSPEC_API maxspec_status maxspec_spectral_free_gap(const maxspec_bounds* b, double* gap);
MAXSPEC_API maxspec_status maxspec_threshold_case_of(const maxspec_bounds* b,
                                                     maxspec_threshold_case* c);
/* CSV "re,im,branch" of n samples of the enclosure boundary. */
MAXSPEC_API maxspec_status maxspec_enclosure_boundary_csv(const maxspec_bounds* b, double im_lo,
                                                          double im_hi, int n, char** csv);
/* *present is 0 where the estimate does not apply. */
MAXSPEC_API maxspec_status maxspec_resolvent_bound(maxspec_complex w, const maxspec_bounds* b,
                                                   int* present, double* bound);
/* CSV "re,im,bound" over an nx-by-ny grid of the window. */
MAXSPEC_API maxspec_status maxspec_resolvent_grid_csv(const maxspec_bounds* b, maxspec_rect window,
                                                      int nx, int ny, char** csv);

/* ---- Spectral sets ---------------------------------------------------- */

typedef enum maxspec_variant {
  MAXSPEC_CONDUCTIVE = 0,
  MAXSPEC_PERMITTIVITY = 1
} maxspec_variant;

/* JSON {"real","imag","points","exact"} of the waveguide essential spectrum. */
MAXSPEC_API maxspec_status maxspec_essential_spectrum_json(maxspec_variant variant, double L2,
                                                           double L3, char** json);
/* JSON {"pollution": set, "imag_segment": set}: the real rays
   |w| >= sqrt(lambda_e_min/(eps_inf mu_inf)) and i[-sigma_max/eps_min, 0]. */
MAXSPEC_API maxspec_status maxspec_pollution_set_json(double eps_inf, double mu_inf,
                                                      double lambda_e_min, double sigma_max,
                                                      double eps_min, char** json);

/* ---- Roots ------------------------------------------------------------ */

typedef struct maxspec_root_options {
  double residual_tol;
  double cluster_size;
  double boundary_clearance;
  int max_newton_iter;
  int jitter_retries;
  double jitter;
} maxspec_root_options;

MAXSPEC_API maxspec_root_options maxspec_root_options_default(void);

typedef struct maxspec_root {
  maxspec_complex location;
  int multiplicity;
  double residual;
  double mode_constant; /* 0 for plain functions */
  int n2, n3;           /* first mode of the group; -1 if none */
  int sign;             /* +1 / -1 branch of the squared form, 0 if not applicable */
} maxspec_root;

typedef struct maxspec_roots maxspec_roots;

/* Zeros of sum_k coeffs[k] z^k inside rect. options may be NULL. */
MAXSPEC_API maxspec_status maxspec_polynomial_roots(const maxspec_complex* coeffs, size_t n_coeffs,
                                                    maxspec_rect rect,
                                                    const maxspec_root_options* options,
                                                    maxspec_roots** out);
/* Zeros of prod_k (z - zeros[k])^orders[k] inside rect, evaluated in product
   form so that the zeros are exact. options may be NULL. */
MAXSPEC_API maxspec_status maxspec_product_roots(const maxspec_complex* zeros, const int* orders,
                                                 size_t n, maxspec_rect rect,
                                                 const maxspec_root_options* options,
                                                 maxspec_roots** out);
MAXSPEC_API size_t maxspec_roots_count(const maxspec_roots* roots);
MAXSPEC_API maxspec_status maxspec_roots_get(const maxspec_roots* roots, size_t i,
                                             maxspec_root* out);
/* CSV "re,im,mult,c,n2,n3,sign,residual". */
MAXSPEC_API maxspec_status maxspec_roots_csv(const maxspec_roots* roots, char** csv);
/* max |Im w + 1/2| over roots with re_min <= |Re w| <= re_max (re_max <= 0: no cap). */
MAXSPEC_API maxspec_status maxspec_branch_asymptote(const maxspec_roots* roots, double re_min,
                                                    double re_max, double* deviation);
MAXSPEC_API void maxspec_roots_destroy(maxspec_roots* roots);

/* ---- Waveguide -------------------------------------------------------- */

typedef struct maxspec_model maxspec_model;

/* delta is ignored for the conductive variant. */
MAXSPEC_API maxspec_status maxspec_model_create(maxspec_variant variant, double L2, double L3,
                                                double delta, maxspec_model** out);
/* Truncate the cylinder at x1 = X (X > 1); X = 0 restores the infinite one. */
MAXSPEC_API maxspec_status maxspec_model_set_truncation(maxspec_model* model, double X);
MAXSPEC_API void maxspec_model_destroy(maxspec_model* model);

/* Mode-constant cap used when c_max <= 0 is passed below. */
MAXSPEC_API maxspec_status maxspec_default_c_max(const maxspec_model* model, maxspec_rect rect,
                                                 double* c_max);
/* Eigenvalues in rect of the infinite or truncated problem, sorted by
   location. c_max <= 0 selects the default; options may be NULL. */
MAXSPEC_API maxspec_status maxspec_eigenvalues(const maxspec_model* model, maxspec_rect rect,
                                               double c_max, const maxspec_root_options* options,
                                               maxspec_roots** out);

typedef struct maxspec_sweep maxspec_sweep;

/* Roots for each X in the ascending list, linked into trajectories.
   match_radius <= 0 selects the default. */
MAXSPEC_API maxspec_status maxspec_sweep_run(const maxspec_model* model, const double* X,
                                             size_t n_X, maxspec_rect rect, double c_max,
                                             double match_radius,
                                             const maxspec_root_options* options,
                                             maxspec_sweep** out);
MAXSPEC_API size_t maxspec_sweep_trajectory_count(const maxspec_sweep* sweep);
/* Copies up to capacity points of trajectory i; *n_points gets the full
   length. X and location may be NULL to query the length only. */
MAXSPEC_API maxspec_status maxspec_sweep_trajectory(const maxspec_sweep* sweep, size_t i,
                                                    double* mode_constant, double* X,
                                                    maxspec_complex* location, size_t capacity,
                                                    size_t* n_points);
MAXSPEC_API int maxspec_sweep_ambiguous_matches(const maxspec_sweep* sweep);
/* CSV "X,re,im,mult,c,n2,n3,sign,residual". */
MAXSPEC_API maxspec_status maxspec_sweep_csv(const maxspec_sweep* sweep, char** csv);
/* CSV "trajectory,X,re,im,c". */
MAXSPEC_API maxspec_status maxspec_sweep_trajectories_csv(const maxspec_sweep* sweep, char** csv);
MAXSPEC_API void maxspec_sweep_destroy(maxspec_sweep* sweep);

typedef enum maxspec_classification {
  MAXSPEC_CONVERGED_TO_EIGENVALUE = 0,
  MAXSPEC_IN_ESSENTIAL = 1,
  MAXSPEC_POLLUTION_CANDIDATE = 2,
  MAXSPEC_VIOLATION = 3,
  MAXSPEC_UNCONVERGED = 4
} maxspec_classification;

/* Classify the sweep's trajectories against true_roots, the essential
   spectrum of the sweep's model, the pollution rays for eps = mu = 1 and
   lambda_e_min = pi^2/max(L2, L3)^2, and i[-sigma, 0] (sigma = 1 for the
   conductive slab, 0 otherwise). counts (may be NULL) receives five totals
   indexed by maxspec_classification; json (may be NULL) the full report. */
MAXSPEC_API maxspec_status maxspec_pollution_report(const maxspec_sweep* sweep,
                                                    const maxspec_roots* true_roots, double tol,
                                                    int counts[5], char** json);

/* ---- Appendix checks -------------------------------------------------- */

typedef enum maxspec_sign_pattern {
  MAXSPEC_ALL_POSITIVE = 0,
  MAXSPEC_ONE_SIGN_CHANGE = 1,
  MAXSPEC_ALL_NEGATIVE = 2,
  MAXSPEC_OTHER_PATTERN = 3
} maxspec_sign_pattern;

MAXSPEC_API maxspec_status maxspec_dtn_sign_pattern(double nu, double L2, double L3, int n_modes,
                                                    maxspec_sign_pattern* pattern);
MAXSPEC_API maxspec_status maxspec_weyl_decay_ratio(double kappa, double L2, double L3,
                                                    double* ratio);
MAXSPEC_API maxspec_status maxspec_fourier_symbol_det(maxspec_complex w, double xi, int n2, int n3,
                                                      double L2, double L3,
                                                      maxspec_complex* numeric,
                                                      maxspec_complex* closed_form);
/* JSON array of {check, parameters, pass, detail}; *all_pass may be NULL. */
MAXSPEC_API maxspec_status maxspec_appendix_checks_json(char** json, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* MAXSPEC_MAXSPEC_H */
