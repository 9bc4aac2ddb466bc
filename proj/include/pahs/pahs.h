/*
 * C interface to the photon-added hypergeometric state library.
 *
 * States are opaque handles created by the pahs_state_* constructors and
 * released with pahs_state_free. Every fallible call returns a pahs_status;
 * on failure pahs_last_error() describes the cause for the calling thread.
 * Output pointers are written only on success unless documented otherwise.
 */
#ifndef PAHS_PAHS_H
#define PAHS_PAHS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PAHS_BUILDING_LIBRARY)
#    define PAHS_API __declspec(dllexport)
#  else
#    define PAHS_API __declspec(dllimport)
#  endif
#else
#  define PAHS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pahs_status {
  PAHS_OK = 0,
  PAHS_ERR_ZERO_STATE = 1,
  PAHS_ERR_INVALID_PARAMS = 2,
  PAHS_ERR_NEGATIVE_COEFFICIENT = 3,
  PAHS_ERR_TRUNCATION_TOO_SMALL = 4,
  PAHS_ERR_INDEX_OUT_OF_RANGE = 5,
  PAHS_ERR_NOT_CONVERGED = 6,
  PAHS_ERR_NULL_ARGUMENT = 7,
  PAHS_ERR_BUFFER_TOO_SMALL = 8,
  PAHS_ERR_INTERNAL = 9
} pahs_status;

typedef struct pahs_state pahs_state;

/* Message for the last failure on this thread; never NULL. */
PAHS_API const char* pahs_last_error(void);
PAHS_API const char* pahs_status_name(pahs_status status);

/* ---- construction ------------------------------------------------------ */

PAHS_API pahs_status pahs_state_hypergeometric(double L, int M, double eta, pahs_state** out);
PAHS_API pahs_status pahs_state_photon_added(double L, int M, double eta, int k,
                                             pahs_state** out);
PAHS_API pahs_status pahs_state_binomial(int M, double eta, pahs_state** out);
PAHS_API pahs_status pahs_state_coherent(double alpha, int dim, pahs_state** out);
PAHS_API pahs_status pahs_state_fock(int n, int dim, pahs_state** out);
/* Normalizes the given amplitudes. `imag` may be NULL for real amplitudes. */
PAHS_API pahs_status pahs_state_from_amplitudes(const double* real, const double* imag,
                                                size_t dim, pahs_state** out);
PAHS_API pahs_status pahs_state_add_photons(const pahs_state* s, int k, pahs_state** out);
PAHS_API void pahs_state_free(pahs_state* s);

/* Smallest admissible L for (M, eta), and the pinned value scale * that. */
PAHS_API double pahs_minimum_population(int M, double eta);
PAHS_API double pahs_pinned_population(int M, double eta, double scale);
/* Discarded Poisson mass of a coherent state truncated to dim levels. */
PAHS_API pahs_status pahs_coherent_tail_mass(double alpha, int dim, double* out);

/* ---- inspection -------------------------------------------------------- */

PAHS_API size_t pahs_state_dim(const pahs_state* s);
/* Copies dim() amplitudes; `imag` may be NULL. */
PAHS_API pahs_status pahs_state_amplitudes(const pahs_state* s, double* real, double* imag,
                                           size_t len);
PAHS_API pahs_status pahs_photon_distribution(const pahs_state* s, double* out, size_t len);
PAHS_API pahs_status pahs_mean_photon_number(const pahs_state* s, double* out);
PAHS_API pahs_status pahs_overlap(const pahs_state* a, const pahs_state* b, double* real,
                                  double* imag);

/* ---- measures ---------------------------------------------------------- */

typedef enum pahs_mu_kind {
  PAHS_MU_FINITE = 0,
  PAHS_MU_INFINITE = 1,
  PAHS_MU_UNDEFINED = 2
} pahs_mu_kind;

PAHS_API pahs_status pahs_sps_quality(const pahs_state* s, pahs_mu_kind* kind, double* value);
PAHS_API pahs_status pahs_anticlassicality(const pahs_state* s, int include_vacuum,
                                           double* out);

/* Dense beamsplitter + partial trace. */
PAHS_API pahs_status pahs_reduced_purity(const pahs_state* s, double* out);
PAHS_API pahs_status pahs_concurrence_potential(const pahs_state* s, double* out);
/* Closed-form purity for the photon-added hypergeometric state. */
PAHS_API pahs_status pahs_purity_closed_form(double L, int M, double eta, int k, double* out);
PAHS_API pahs_status pahs_concurrence_closed_form(double L, int M, double eta, int k,
                                                  double* out);

/* ---- phase space ------------------------------------------------------- */

PAHS_API pahs_status pahs_wigner_point(const pahs_state* s, double x, double p, double* out);
/* Oracle route (direct position-space integral); small states only. */
PAHS_API pahs_status pahs_wigner_oracle_point(const pahs_state* s, double x, double p,
                                              double* out);

/* Fills values[ix * np + ip] = W(x_ix, p_ip) on an equally spaced grid that
 * includes both end points. `values` must hold nx * np doubles. */
PAHS_API pahs_status pahs_wigner_grid(const pahs_state* s, double x_min, double x_max,
                                      size_t nx, double p_min, double p_max, size_t np,
                                      double* values);

typedef struct pahs_quadrature_spec {
  double cutoff;          /* disk radius; <= 0 selects the default rule */
  size_t nodes_per_axis;  /* 0 selects the default (256) */
  size_t panel_order;     /* 0 selects the default (4) */
  double tolerance;       /* <= 0 selects the default (1e-4) */
  unsigned threads;       /* 0 selects hardware concurrency */
} pahs_quadrature_spec;

typedef struct pahs_integral_result {
  double value;     /* at 2 * nodes_per_axis */
  double delta;     /* change against nodes_per_axis (log scale for WLN) */
  double cutoff;
  size_t nodes;     /* nodes per axis of `value` */
  int converged;
} pahs_integral_result;

/* Natural-log Wigner logarithmic negativity. On PAHS_ERR_NOT_CONVERGED the
 * result is still written so callers can flag it. `spec` may be NULL. */
PAHS_API pahs_status pahs_wigner_log_negativity(const pahs_state* s,
                                                const pahs_quadrature_spec* spec,
                                                pahs_integral_result* out);
/* Integral of W over the quadrature disk (normalization diagnostic). */
PAHS_API pahs_status pahs_wigner_integral(const pahs_state* s, const pahs_quadrature_spec* spec,
                                          pahs_integral_result* out);

#ifdef __cplusplus
}
#endif

#endif /* PAHS_PAHS_H */
