#pragma once

#include <cstddef>
#include <vector>

#include "pahs/fock.hpp"
#include "pahs/states.hpp"

namespace pahs {

/// Pure two-mode state; amplitude of |j, l> stored at j * dim + l.
class TwoModeState {
 public:
  TwoModeState(std::size_t dim, std::vector<Complex> amplitudes);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t j, std::size_t l) const { return amps_[j * dim_ + l]; }
  double norm_squared() const;

 private:
  std::size_t dim_;
  std::vector<Complex> amps_;
};

enum class BeamsplitterPhase {
  /// Reflected arm picks up i: |n,0> -> sum C(n,j)^{1/2} 2^{-n/2} i^{n-j} |j, n-j>.
  Imaginary,
  /// Real-coefficient convention: |n,0> -> sum C(n,j)^{1/2} 2^{-n/2} |j, n-j>.
  Real,
};

/// Mixes `s` with vacuum on a 50:50 beamsplitter.
TwoModeState beamsplitter_with_vacuum(const FockState& s,
                                      BeamsplitterPhase phase = BeamsplitterPhase::Imaginary);

enum class TracedMode { A, B };

/// Tr(rho^2) of the reduced state left after tracing out `traced`. The default
/// traces mode A and so returns the purity of rho_B.
double reduced_purity(const TwoModeState& t, TracedMode traced = TracedMode::A);

/// sqrt(2 (1 - Tr rho_B^2)) of the beamsplitter output.
double concurrence_potential(const FockState& s);

/// Tr(rho_B^2) for the photon-added hypergeometric input, from the closed
/// quadruple sum over (n, m, r, k1); O(M^3 (M + k)).
double purity_closed_form_pahs(const HypergeometricParams& p);

/// Concurrence potential from purity_closed_form_pahs.
double concurrence_potential_pahs(const HypergeometricParams& p);

}  // namespace pahs
