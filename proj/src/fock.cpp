#include "pahs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pahs/error.hpp"
#include "pahs/special.hpp"

namespace pahs {

FockState FockState::normalized(std::vector<Complex> amplitudes) {
  if (amplitudes.empty()) {
    throw Error(ErrorCode::ZeroState, "state has no amplitudes");
  }
  // Scale by the largest magnitude first so the norm cannot under/overflow.
  double largest = 0.0;
  for (const auto& c : amplitudes) largest = std::max(largest, std::abs(c));
  if (!(largest >= 1e-300) || !std::isfinite(largest)) {
    throw Error(ErrorCode::ZeroState, "state amplitudes are numerically zero");
  }
  CompensatedSum acc;
  for (auto& c : amplitudes) {
    c /= largest;
    acc.add(std::norm(c));
  }
  const double norm = std::sqrt(acc.value());
  for (auto& c : amplitudes) c /= norm;
  return FockState(std::move(amplitudes));
}

FockState FockState::normalized(std::span<const double> amplitudes) {
  return normalized(std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
}

std::size_t FockState::top_index() const noexcept {
  for (std::size_t n = amplitudes_.size(); n-- > 0;) {
    if (amplitudes_[n] != Complex{}) return n;
  }
  return 0;
}

FockState add_photons(const FockState& s, int k) {
  if (k < 0) {
    throw Error(ErrorCode::InvalidParams, "photon number to add must be >= 0");
  }
  if (k == 0) return s;
  const std::size_t dim = s.dim() + static_cast<std::size_t>(k);
  // 0.5 * ln((n+k)!/n!) per level, shifted by the maximum before exponentiating.
  std::vector<double> log_gain(s.dim());
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < s.dim(); ++n) {
    const long nl = static_cast<long>(n);
    log_gain[n] = 0.5 * (log_factorial(nl + k) - log_factorial(nl));
    if (s[n] != Complex{}) top = std::max(top, log_gain[n]);
  }
  std::vector<Complex> out(dim, Complex{});
  for (std::size_t n = 0; n < s.dim(); ++n) {
    if (s[n] == Complex{}) continue;
    out[n + static_cast<std::size_t>(k)] = s[n] * std::exp(log_gain[n] - top);
  }
  return FockState::normalized(std::move(out));
}

std::vector<double> photon_number_distribution(const FockState& s) {
  std::vector<double> p(s.dim());
  for (std::size_t n = 0; n < s.dim(); ++n) p[n] = std::norm(s[n]);
  return p;
}

double mean_photon_number(const FockState& s) {
  CompensatedSum acc;
  for (std::size_t n = 1; n < s.dim(); ++n) {
    acc.add(static_cast<double>(n) * std::norm(s[n]));
  }
  return acc.value();
}

Complex overlap(const FockState& a, const FockState& b) {
  const std::size_t common = std::min(a.dim(), b.dim());
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t n = 0; n < common; ++n) {
    const Complex t = std::conj(a[n]) * b[n];
    re.add(t.real());
    im.add(t.imag());
  }
  return {re.value(), im.value()};
}

double fidelity(const FockState& a, const FockState& b) {
  return std::norm(overlap(a, b));
}

}  // namespace pahs
