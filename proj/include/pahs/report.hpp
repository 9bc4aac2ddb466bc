#pragma once

#include <optional>

#include "pahs/fock.hpp"
#include "pahs/measures.hpp"
#include "pahs/states.hpp"
#include "pahs/wigner.hpp"

namespace pahs {

struct MeasureSelection {
  bool mu = true;
  bool anticlassicality = true;
  bool concurrence = true;
  bool wln = true;
};

/// Scalar quantifiers of one state together with the WLN convergence data.
struct MeasureReport {
  double mean_n = 0.0;
  std::optional<SpsQuality> mu;
  std::optional<double> anticlassicality;
  std::optional<double> anticlassicality_with_vacuum;
  std::optional<double> concurrence;
  std::optional<LogNegativity> wln;
};

/// When `params` is given the concurrence uses the closed-form purity of the
/// photon-added hypergeometric state; otherwise the dense beamsplitter path.
/// WLN is reported even when unconverged; check wln->integral.converged.
MeasureReport measure_state(const FockState& s, const MeasureSelection& which,
                            const QuadratureSpec& quad = {},
                            const std::optional<HypergeometricParams>& params = std::nullopt);

}  // namespace pahs
