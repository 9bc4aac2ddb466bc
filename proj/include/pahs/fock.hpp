#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pahs {

using Complex = std::complex<double>;

/// Pure single-mode state truncated to the first `dim()` number states.
///
/// The only way to obtain a FockState is through a normalizing factory, so
/// every instance satisfies sum |c_n|^2 = 1.
class FockState {
 public:
  /// Divides by the Euclidean norm. Throws ZeroState if the norm is below
  /// 1e-300.
  static FockState normalized(std::vector<Complex> amplitudes);
  static FockState normalized(std::span<const double> amplitudes);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t n) const { return amplitudes_[n]; }

  /// Highest index carrying a nonzero amplitude.
  std::size_t top_index() const noexcept;

 private:
  explicit FockState(std::vector<Complex> amplitudes)
      : amplitudes_(std::move(amplitudes)) {}

  std::vector<Complex> amplitudes_;
};

/// Applies (a^dagger)^k and renormalizes. Output has dim() + k levels and
/// exact zeros below index k.
FockState add_photons(const FockState& s, int k);

/// p_m = |c_m|^2.
std::vector<double> photon_number_distribution(const FockState& s);

double mean_photon_number(const FockState& s);

/// <a|b>, the shorter vector zero-padded.
Complex overlap(const FockState& a, const FockState& b);

/// |<a|b>|^2
double fidelity(const FockState& a, const FockState& b);

}  // namespace pahs
