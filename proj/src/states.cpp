#include "pahs/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "pahs/error.hpp"
#include "pahs/special.hpp"

namespace pahs {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTailLimit = 1e-8;

}  // namespace

std::string HypergeometricParams::violation() const {
  std::ostringstream msg;
  if (!(eta >= 0.0 && eta <= 1.0)) {
    msg << "eta must lie in [0, 1], got " << eta;
  } else if (M < 0) {
    msg << "M must be >= 0, got " << M;
  } else if (k < 0) {
    msg << "k must be >= 0, got " << k;
  } else if (!(L > 0.0) || !std::isfinite(L)) {
    msg << "L must be a positive finite real, got " << L;
  } else {
    const double need = minimum_population(M, eta);
    if (L < need * (1.0 - 1e-12)) {
      msg << "L must satisfy L >= max{M/eta, M/(1-eta)} = " << need
          << ", got " << L;
    }
  }
  return msg.str();
}

void HypergeometricParams::validate() const {
  if (auto why = violation(); !why.empty()) {
    throw Error(ErrorCode::InvalidParams, why);
  }
}

double minimum_population(int M, double eta) {
  if (eta <= 0.0 || eta >= 1.0) return static_cast<double>(M);
  return std::max(M / eta, M / (1.0 - eta));
}

double pinned_population(int M, double eta, double scale) {
  return scale * std::max(minimum_population(M, eta), 1.0);
}

double log_hypergeometric_probability(double L, int M, double eta, long n) {
  if (n < 0 || n > M) return kNegInf;
  const double a = log_binomial_real(L * eta, n);
  const double b = log_binomial_real(L * (1.0 - eta), M - n);
  if (a == kNegInf || b == kNegInf) return kNegInf;
  return a + b - log_binomial_real(L, M);
}

FockState hypergeometric(const HypergeometricParams& p) {
  p.validate();
  std::vector<Complex> amps(static_cast<std::size_t>(p.M) + 1);
  for (int n = 0; n <= p.M; ++n) {
    const double lp = log_hypergeometric_probability(p.L, p.M, p.eta, n);
    amps[n] = lp == kNegInf ? 0.0 : std::exp(0.5 * lp);
  }
  return FockState::normalized(std::move(amps));
}

FockState photon_added_hypergeometric(const HypergeometricParams& p) {
  return add_photons(hypergeometric(p), p.k);
}

double pahs_normalization(const HypergeometricParams& p) {
  p.validate();
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(p.M) + 1);
  for (int n = 0; n <= p.M; ++n) {
    const double lp = log_hypergeometric_probability(p.L, p.M, p.eta, n);
    terms.push_back(lp + log_factorial(n + p.k) - log_factorial(n));
  }
  return std::exp(-0.5 * log_sum_exp(terms));
}

FockState binomial(int M, double eta) {
  if (M < 0 || !(eta >= 0.0 && eta <= 1.0)) {
    throw Error(ErrorCode::InvalidParams,
                "binomial state needs M >= 0 and eta in [0, 1]");
  }
  std::vector<Complex> amps(static_cast<std::size_t>(M) + 1, 0.0);
  if (eta == 0.0) {
    amps.front() = 1.0;
  } else if (eta == 1.0) {
    amps.back() = 1.0;
  } else {
    const double le = std::log(eta);
    const double lq = std::log1p(-eta);
    const double lm = log_factorial(M);
    for (int n = 0; n <= M; ++n) {
      const double lp = lm - log_factorial(n) - log_factorial(M - n) + n * le +
                        (M - n) * lq;
      amps[n] = std::exp(0.5 * lp);
    }
  }
  return FockState::normalized(std::move(amps));
}

double coherent_tail_mass(double alpha, int dim) {
  if (dim < 1) {
    throw Error(ErrorCode::InvalidParams, "truncation dimension must be >= 1");
  }
  if (alpha == 0.0) return 0.0;
  const double a2 = alpha * alpha;
  const double la2 = std::log(a2);
  CompensatedSum tail;
  for (long n = dim;; ++n) {
    const double term = std::exp(n * la2 - a2 - log_factorial(n));
    tail.add(term);
    // Past the Poisson mode the terms shrink geometrically.
    if (static_cast<double>(n) > a2 &&
        (term < 1e-300 || term < 1e-18 * tail.value())) {
      break;
    }
  }
  return tail.value();
}

FockState coherent_truncated(double alpha, int dim) {
  if (!std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidParams, "alpha must be finite");
  }
  const double tail = coherent_tail_mass(alpha, dim);
  if (tail > kTailLimit) {
    std::ostringstream msg;
    msg << "truncation dim=" << dim << " discards Poisson mass " << tail
        << " > " << kTailLimit << " for alpha=" << alpha;
    throw Error(ErrorCode::TruncationTooSmall, msg.str());
  }
  std::vector<Complex> amps(static_cast<std::size_t>(dim), 0.0);
  if (alpha == 0.0) {
    amps.front() = 1.0;
    return FockState::normalized(std::move(amps));
  }
  const double la = std::log(std::abs(alpha));
  const double a2 = alpha * alpha;
  for (int n = 0; n < dim; ++n) {
    const double mag = std::exp(n * la - 0.5 * log_factorial(n) - 0.5 * a2);
    amps[n] = (alpha < 0.0 && n % 2 == 1) ? -mag : mag;
  }
  return FockState::normalized(std::move(amps));
}

FockState fock(int n, int dim) {
  if (n < 0 || n >= dim) {
    std::ostringstream msg;
    msg << "Fock index " << n << " outside [0, " << dim << ")";
    throw Error(ErrorCode::IndexOutOfRange, msg.str());
  }
  std::vector<Complex> amps(static_cast<std::size_t>(dim), 0.0);
  amps[static_cast<std::size_t>(n)] = 1.0;
  return FockState::normalized(std::move(amps));
}

}  // namespace pahs
