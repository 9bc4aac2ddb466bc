#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pahs/fock.hpp"

namespace pahs {

/// Closed-form Wigner function (hbar = 1) from the Laguerre expansion of the
/// number-state kernels W_{n,n'}(x, p).
double wigner_point(const FockState& s, double x, double p);

/// Direct evaluation of (1/pi) * int psi*(x+y) psi(x-y) exp(2ipy) dy with the
/// position-space wavefunction. Independent of the Laguerre path; meant for
/// small states (dim up to ~30). Throws QuadratureNotConverged when two
/// successive refinements differ by more than 1e-7.
double wigner_oracle_point(const FockState& s, double x, double p);

struct GridExtent {
  double x_min = -4.0;
  double x_max = 4.0;
  double p_min = -4.0;
  double p_max = 4.0;
  std::size_t nx = 101;
  std::size_t np = 101;
};

struct WignerGrid {
  GridExtent extent;
  std::vector<double> values;  // row-major, index ix * np + ip

  double x(std::size_t ix) const;
  double p(std::size_t ip) const;
  double at(std::size_t ix, std::size_t ip) const { return values[ix * extent.np + ip]; }
  double min() const;
  double max() const;
  /// Trapezoid-rule estimate of the integral of W over the grid.
  double integral() const;
};

WignerGrid wigner_grid(const FockState& s, const GridExtent& extent);

/// Number of sign changes of W(x, 0) for x in (0, x_max], sampled on
/// `samples` equally spaced points. Values with |W| < 1e-12 are skipped.
int count_sign_changes_positive_x(const FockState& s, double x_max,
                                  std::size_t samples = 4000);

/// Phase-space quadrature over the disk x^2 + p^2 <= R^2: composite
/// Gauss-Legendre in the radius and in the angle, with radial panels split
/// at sign changes of W when integrating |W|. The value is computed at
/// nodes_per_axis and at twice that, and the difference is reported.
struct QuadratureSpec {
  /// Disk radius R; defaults to sqrt(2 * max(<n>, n_top)) + 5 where n_top is
  /// the highest occupied level.
  std::optional<double> cutoff;
  /// Gauss-Legendre nodes per axis (radial and angular), >= 32.
  std::size_t nodes_per_axis = 256;
  /// Points per composite panel.
  std::size_t panel_order = 4;
  /// Largest change tolerated when nodes_per_axis is doubled.
  double tolerance = 1e-4;
  /// Worker threads; 0 picks hardware concurrency.
  unsigned threads = 0;
};

double default_cutoff(const FockState& s);

struct PhaseSpaceIntegral {
  double value = 0.0;       // result at 2 * nodes_per_axis
  double coarse = 0.0;      // result at nodes_per_axis
  double delta = 0.0;       // |value - coarse|
  double cutoff = 0.0;
  std::size_t nodes = 0;    // nodes per axis of the reported value
  bool converged = false;
};

/// Integral of W over the disk; ~1 for a normalized state.
PhaseSpaceIntegral integrate_wigner(const FockState& s, const QuadratureSpec& spec = {});

/// Integral of |W| over the disk.
PhaseSpaceIntegral integrate_abs_wigner(const FockState& s, const QuadratureSpec& spec = {});

struct LogNegativity {
  double value = 0.0;   // natural log of the integral of |W|
  PhaseSpaceIntegral integral;
  const char* log_base = "e";
};

/// ln of the integrated |W|, without throwing on non-convergence.
LogNegativity evaluate_log_negativity(const FockState& s, const QuadratureSpec& spec = {});

/// As evaluate_log_negativity, but throws QuadratureNotConverged when the
/// node-doubling change in the log exceeds spec.tolerance.
LogNegativity wigner_log_negativity(const FockState& s, const QuadratureSpec& spec = {});

}  // namespace pahs
