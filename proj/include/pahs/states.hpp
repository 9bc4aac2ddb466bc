#pragma once

#include <string>

#include "pahs/fock.hpp"

namespace pahs {

/// Parameters of the (photon-added) hypergeometric state |L, M, eta, k>.
///
/// Validity: 0 <= eta <= 1, M >= 0, k >= 0, L > 0 and
/// L >= max{M / eta, M / (1 - eta)} for 0 < eta < 1; at the endpoints
/// eta in {0, 1} only L >= M is required.
struct HypergeometricParams {
  double L = 1.0;
  int M = 0;
  double eta = 0.0;
  int k = 0;

  /// Empty when valid, otherwise a description of the violated constraint.
  std::string violation() const;
  void validate() const;
};

/// Smallest L admitted for (M, eta). For eta in {0, 1} this is M.
double minimum_population(int M, double eta);

/// L = scale * minimum_population(M, eta), floored at scale for M = 0.
double pinned_population(int M, double eta, double scale);

/// ln P(n) for the hypergeometric distribution, -inf where it vanishes.
double log_hypergeometric_probability(double L, int M, double eta, long n);

/// Hypergeometric state in M + 1 levels; p.k is ignored.
FockState hypergeometric(const HypergeometricParams& p);

/// k-photon-added hypergeometric state, M + k + 1 levels.
FockState photon_added_hypergeometric(const HypergeometricParams& p);

/// N_PAHS evaluated directly from its defining sum.
double pahs_normalization(const HypergeometricParams& p);

FockState binomial(int M, double eta);

/// Coherent state with real amplitude alpha, truncated to `dim` levels.
/// Throws TruncationTooSmall if the discarded Poisson mass exceeds 1e-8.
FockState coherent_truncated(double alpha, int dim);

/// Poisson(alpha^2) mass at n >= dim.
double coherent_tail_mass(double alpha, int dim);

FockState fock(int n, int dim);

}  // namespace pahs
