#include "pahs/report.hpp"

#include "pahs/entanglement.hpp"

namespace pahs {

MeasureReport measure_state(const FockState& s, const MeasureSelection& which,
                            const QuadratureSpec& quad,
                            const std::optional<HypergeometricParams>& params) {
  MeasureReport r;
  r.mean_n = mean_photon_number(s);
  if (which.mu) r.mu = sps_quality_mu(s);
  if (which.anticlassicality) {
    r.anticlassicality = anticlassicality(s, false);
    r.anticlassicality_with_vacuum = anticlassicality(s, true);
  }
  if (which.concurrence) {
    r.concurrence = params ? concurrence_potential_pahs(*params) : concurrence_potential(s);
  }
  if (which.wln) r.wln = evaluate_log_negativity(s, quad);
  return r;
}

}  // namespace pahs
