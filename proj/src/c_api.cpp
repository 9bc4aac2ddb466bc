#include "pahs/pahs.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "pahs/entanglement.hpp"
#include "pahs/error.hpp"
#include "pahs/fock.hpp"
#include "pahs/measures.hpp"
#include "pahs/states.hpp"
#include "pahs/wigner.hpp"

struct pahs_state {
  pahs::FockState state;
};

namespace {

thread_local std::string last_error;

pahs_status to_status(pahs::ErrorCode code) {
  using pahs::ErrorCode;
  switch (code) {
    case ErrorCode::ZeroState: return PAHS_ERR_ZERO_STATE;
    case ErrorCode::InvalidParams: return PAHS_ERR_INVALID_PARAMS;
    case ErrorCode::NegativeCoefficient: return PAHS_ERR_NEGATIVE_COEFFICIENT;
    case ErrorCode::TruncationTooSmall: return PAHS_ERR_TRUNCATION_TOO_SMALL;
    case ErrorCode::IndexOutOfRange: return PAHS_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::QuadratureNotConverged: return PAHS_ERR_NOT_CONVERGED;
  }
  return PAHS_ERR_INTERNAL;
}

pahs_status fail(pahs_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
pahs_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const pahs::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PAHS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PAHS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PAHS_ERR_INTERNAL, "unknown exception");
  }
}

pahs_status emit(pahs::FockState s, pahs_state** out) {
  *out = new pahs_state{std::move(s)};
  return PAHS_OK;
}

pahs::QuadratureSpec to_spec(const pahs_quadrature_spec* c) {
  pahs::QuadratureSpec spec;
  if (c == nullptr) return spec;
  if (c->cutoff > 0.0) spec.cutoff = c->cutoff;
  if (c->nodes_per_axis != 0) spec.nodes_per_axis = c->nodes_per_axis;
  if (c->panel_order != 0) spec.panel_order = c->panel_order;
  if (c->tolerance > 0.0) spec.tolerance = c->tolerance;
  spec.threads = c->threads;
  return spec;
}

void fill(const pahs::PhaseSpaceIntegral& in, double value, pahs_integral_result* out) {
  out->value = value;
  out->delta = in.delta;
  out->cutoff = in.cutoff;
  out->nodes = in.nodes;
  out->converged = in.converged ? 1 : 0;
}

#define PAHS_REQUIRE(ptr)                                                   \
  do {                                                                      \
    if ((ptr) == nullptr) return fail(PAHS_ERR_NULL_ARGUMENT, #ptr " is NULL"); \
  } while (0)

}  // namespace

extern "C" {

const char* pahs_last_error(void) { return last_error.c_str(); }

const char* pahs_status_name(pahs_status status) {
  switch (status) {
    case PAHS_OK: return "OK";
    case PAHS_ERR_ZERO_STATE: return "ZeroState";
    case PAHS_ERR_INVALID_PARAMS: return "InvalidParams";
    case PAHS_ERR_NEGATIVE_COEFFICIENT: return "NegativeCoefficient";
    case PAHS_ERR_TRUNCATION_TOO_SMALL: return "TruncationTooSmall";
    case PAHS_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case PAHS_ERR_NOT_CONVERGED: return "QuadratureNotConverged";
    case PAHS_ERR_NULL_ARGUMENT: return "NullArgument";
    case PAHS_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case PAHS_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

pahs_status pahs_state_hypergeometric(double L, int M, double eta, pahs_state** out) {
  return guarded([&] {
    PAHS_REQUIRE(out);
    return emit(pahs::hypergeometric({L, M, eta, 0}), out);
  });
}

pahs_status pahs_state_photon_added(double L, int M, double eta, int k, pahs_state** out) {
  return guarded([&] {
    PAHS_REQUIRE(out);
    return emit(pahs::photon_added_hypergeometric({L, M, eta, k}), out);
  });
}

pahs_status pahs_state_binomial(int M, double eta, pahs_state** out) {
  return guarded([&] {
    PAHS_REQUIRE(out);
    return emit(pahs::binomial(M, eta), out);
  });
}

pahs_status pahs_state_coherent(double alpha, int dim, pahs_state** out) {
  return guarded([&] {
    PAHS_REQUIRE(out);
    return emit(pahs::coherent_truncated(alpha, dim), out);
  });
}

pahs_status pahs_state_fock(int n, int dim, pahs_state** out) {
  return guarded([&] {
    PAHS_REQUIRE(out);
    return emit(pahs::fock(n, dim), out);
  });
}

pahs_status pahs_state_from_amplitudes(const double* real, const double* imag, size_t dim,
                                       pahs_state** out) {
  return guarded([&] {
    PAHS_REQUIRE(real);
    PAHS_REQUIRE(out);
    std::vector<pahs::Complex> amps(dim);
    for (size_t n = 0; n < dim; ++n) amps[n] = {real[n], imag ? imag[n] : 0.0};
    return emit(pahs::FockState::normalized(std::move(amps)), out);
  });
}

pahs_status pahs_state_add_photons(const pahs_state* s, int k, pahs_state** out) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    return emit(pahs::add_photons(s->state, k), out);
  });
}

void pahs_state_free(pahs_state* s) { delete s; }

double pahs_minimum_population(int M, double eta) { return pahs::minimum_population(M, eta); }

double pahs_pinned_population(int M, double eta, double scale) {
  return pahs::pinned_population(M, eta, scale);
}

pahs_status pahs_coherent_tail_mass(double alpha, int dim, double* out) {
  return guarded([&] {
    PAHS_REQUIRE(out);
    *out = pahs::coherent_tail_mass(alpha, dim);
    return PAHS_OK;
  });
}

size_t pahs_state_dim(const pahs_state* s) { return s ? s->state.dim() : 0; }

pahs_status pahs_state_amplitudes(const pahs_state* s, double* real, double* imag, size_t len) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(real);
    if (len < s->state.dim()) return fail(PAHS_ERR_BUFFER_TOO_SMALL, "amplitude buffer too small");
    for (size_t n = 0; n < s->state.dim(); ++n) {
      real[n] = s->state[n].real();
      if (imag) imag[n] = s->state[n].imag();
    }
    return PAHS_OK;
  });
}

pahs_status pahs_photon_distribution(const pahs_state* s, double* out, size_t len) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    if (len < s->state.dim()) return fail(PAHS_ERR_BUFFER_TOO_SMALL, "distribution buffer too small");
    const auto p = pahs::photon_number_distribution(s->state);
    std::copy(p.begin(), p.end(), out);
    return PAHS_OK;
  });
}

pahs_status pahs_mean_photon_number(const pahs_state* s, double* out) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    *out = pahs::mean_photon_number(s->state);
    return PAHS_OK;
  });
}

pahs_status pahs_overlap(const pahs_state* a, const pahs_state* b, double* real, double* imag) {
  return guarded([&] {
    PAHS_REQUIRE(a);
    PAHS_REQUIRE(b);
    PAHS_REQUIRE(real);
    PAHS_REQUIRE(imag);
    const auto o = pahs::overlap(a->state, b->state);
    *real = o.real();
    *imag = o.imag();
    return PAHS_OK;
  });
}

pahs_status pahs_sps_quality(const pahs_state* s, pahs_mu_kind* kind, double* value) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(kind);
    PAHS_REQUIRE(value);
    const auto mu = pahs::sps_quality_mu(s->state);
    switch (mu.kind) {
      case pahs::SpsQuality::Kind::Finite: *kind = PAHS_MU_FINITE; break;
      case pahs::SpsQuality::Kind::Infinite: *kind = PAHS_MU_INFINITE; break;
      case pahs::SpsQuality::Kind::Undefined: *kind = PAHS_MU_UNDEFINED; break;
    }
    *value = mu.value;
    return PAHS_OK;
  });
}

pahs_status pahs_anticlassicality(const pahs_state* s, int include_vacuum, double* out) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    *out = pahs::anticlassicality(s->state, include_vacuum != 0);
    return PAHS_OK;
  });
}

pahs_status pahs_reduced_purity(const pahs_state* s, double* out) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    *out = pahs::reduced_purity(pahs::beamsplitter_with_vacuum(s->state));
    return PAHS_OK;
  });
}

pahs_status pahs_concurrence_potential(const pahs_state* s, double* out) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    *out = pahs::concurrence_potential(s->state);
    return PAHS_OK;
  });
}

pahs_status pahs_purity_closed_form(double L, int M, double eta, int k, double* out) {
  return guarded([&] {
    PAHS_REQUIRE(out);
    *out = pahs::purity_closed_form_pahs({L, M, eta, k});
    return PAHS_OK;
  });
}

pahs_status pahs_concurrence_closed_form(double L, int M, double eta, int k, double* out) {
  return guarded([&] {
    PAHS_REQUIRE(out);
    *out = pahs::concurrence_potential_pahs({L, M, eta, k});
    return PAHS_OK;
  });
}

pahs_status pahs_wigner_point(const pahs_state* s, double x, double p, double* out) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    *out = pahs::wigner_point(s->state, x, p);
    return PAHS_OK;
  });
}

pahs_status pahs_wigner_oracle_point(const pahs_state* s, double x, double p, double* out) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    *out = pahs::wigner_oracle_point(s->state, x, p);
    return PAHS_OK;
  });
}

pahs_status pahs_wigner_grid(const pahs_state* s, double x_min, double x_max, size_t nx,
                             double p_min, double p_max, size_t np, double* values) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(values);
    const auto grid = pahs::wigner_grid(s->state, {x_min, x_max, p_min, p_max, nx, np});
    std::copy(grid.values.begin(), grid.values.end(), values);
    return PAHS_OK;
  });
}

pahs_status pahs_wigner_log_negativity(const pahs_state* s, const pahs_quadrature_spec* spec,
                                       pahs_integral_result* out) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    const auto wln = pahs::evaluate_log_negativity(s->state, to_spec(spec));
    fill(wln.integral, wln.value, out);
    if (!wln.integral.converged) {
      return fail(PAHS_ERR_NOT_CONVERGED,
                  "Wigner log-negativity changed by " + std::to_string(wln.integral.delta) +
                      " under node doubling");
    }
    return PAHS_OK;
  });
}

pahs_status pahs_wigner_integral(const pahs_state* s, const pahs_quadrature_spec* spec,
                                 pahs_integral_result* out) {
  return guarded([&] {
    PAHS_REQUIRE(s);
    PAHS_REQUIRE(out);
    const auto integral = pahs::integrate_wigner(s->state, to_spec(spec));
    fill(integral, integral.value, out);
    if (!integral.converged) {
      return fail(PAHS_ERR_NOT_CONVERGED, "Wigner integral did not converge");
    }
    return PAHS_OK;
  });
}

}  // extern "C"
