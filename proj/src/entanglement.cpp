#include "pahs/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pahs/error.hpp"
#include "pahs/special.hpp"

namespace pahs {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

TwoModeState::TwoModeState(std::size_t dim, std::vector<Complex> amplitudes)
    : dim_(dim), amps_(std::move(amplitudes)) {
  if (dim_ == 0 || amps_.size() != dim_ * dim_) {
    throw Error(ErrorCode::InvalidParams, "two-mode amplitudes must be dim x dim");
  }
}

double TwoModeState::norm_squared() const {
  CompensatedSum acc;
  for (const auto& c : amps_) acc.add(std::norm(c));
  return acc.value();
}

TwoModeState beamsplitter_with_vacuum(const FockState& s, BeamsplitterPhase phase) {
  const std::size_t dim = s.dim();
  std::vector<Complex> out(dim * dim, Complex{});
  // i^e for e = 0..3
  const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t n = 0; n < dim; ++n) {
    if (s[n] == Complex{}) continue;
    const long nl = static_cast<long>(n);
    const double log_half = -0.5 * static_cast<double>(n) * std::numbers::ln2;
    for (std::size_t j = 0; j <= n; ++j) {
      const long jl = static_cast<long>(j);
      const double mag = std::exp(
          0.5 * (log_factorial(nl) - log_factorial(jl) - log_factorial(nl - jl)) + log_half);
      const Complex ph = phase == BeamsplitterPhase::Imaginary ? ipow[(n - j) % 4] : Complex{1, 0};
      out[j * dim + (n - j)] += s[n] * mag * ph;
    }
  }
  return TwoModeState(dim, std::move(out));
}

double reduced_purity(const TwoModeState& t, TracedMode traced) {
  const std::size_t dim = t.dim();
  // rho[a][b] over the kept mode, summing the traced index.
  std::vector<Complex> rho(dim * dim, Complex{});
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      Complex acc{};
      for (std::size_t j = 0; j < dim; ++j) {
        acc += traced == TracedMode::A ? t(j, a) * std::conj(t(j, b))
                                       : t(a, j) * std::conj(t(b, j));
      }
      rho[a * dim + b] = acc;
    }
  }
  CompensatedSum purity;
  for (const auto& c : rho) purity.add(std::norm(c));
  return purity.value();
}

double concurrence_potential(const FockState& s) {
  const double purity = reduced_purity(beamsplitter_with_vacuum(s));
  return std::sqrt(2.0 * std::max(0.0, 1.0 - purity));
}

double purity_closed_form_pahs(const HypergeometricParams& p) {
  p.validate();
  const int M = p.M;
  const int k = p.k;
  const double log_norm = std::log(pahs_normalization(p));

  std::vector<double> log_prob(static_cast<std::size_t>(M) + 1);
  for (int n = 0; n <= M; ++n) {
    log_prob[n] = log_hypergeometric_probability(p.L, M, p.eta, n);
  }
  std::vector<double> lf(static_cast<std::size_t>(M + k) + 1);
  for (std::size_t i = 0; i < lf.size(); ++i) lf[i] = log_factorial(static_cast<long>(i));

  // Per-index pieces: 0.5 ln P(n) + ln (n+k)! - 0.5 ln n!
  std::vector<double> site(static_cast<std::size_t>(M) + 1);
  for (int n = 0; n <= M; ++n) {
    site[n] = log_prob[n] == kNegInf ? kNegInf : 0.5 * log_prob[n] + lf[n + k] - 0.5 * lf[n];
  }

  CompensatedSum total;
  for (int n = 0; n <= M; ++n) {
    if (site[n] == kNegInf) continue;
    for (int m = 0; m <= M; ++m) {
      if (site[m] == kNegInf) continue;
      for (int r = 0; r <= M; ++r) {
        const int q = n - m + r;
        if (site[r] == kNegInf || q < 0 || q > M || site[q] == kNegInf) continue;
        const double outer = 4.0 * log_norm + site[n] + site[m] + site[r] + site[q] -
                             static_cast<double>(n + r + 2 * k) * std::numbers::ln2;
        // Factorials of negative integers in the denominator vanish the term.
        const int lo = std::max(0, m - r);
        const int hi = std::min(n + k, m + k);
        for (int k1 = lo; k1 <= hi; ++k1) {
          const double inner = lf[k1] + lf[n + k - k1] + lf[m + k - k1] + lf[r - m + k1];
          total.add(std::exp(outer - inner));
        }
      }
    }
  }
  return total.value();
}

double concurrence_potential_pahs(const HypergeometricParams& p) {
  return std::sqrt(2.0 * std::max(0.0, 1.0 - purity_closed_form_pahs(p)));
}

}  // namespace pahs
