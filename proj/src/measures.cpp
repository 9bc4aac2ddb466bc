#include "pahs/measures.hpp"

#include <algorithm>

#include "pahs/special.hpp"

namespace pahs {

namespace {
constexpr double kPoleThreshold = 1e-14;
}

SpsQuality sps_quality_mu(const FockState& s) {
  const auto p = photon_number_distribution(s);
  const double p1 = p.size() > 1 ? p[1] : 0.0;
  // Summing the multiphoton tail directly avoids the cancellation in 1-P0-P1.
  CompensatedSum tail;
  for (std::size_t m = 2; m < p.size(); ++m) tail.add(p[m]);
  const double denom = tail.value();

  if (denom <= kPoleThreshold) {
    if (p1 <= kPoleThreshold) return {SpsQuality::Kind::Undefined, 0.0};
    return {SpsQuality::Kind::Infinite, 0.0};
  }
  if (p1 == 0.0) return {SpsQuality::Kind::Finite, 0.0};
  return {SpsQuality::Kind::Finite, p1 / denom};
}

double anticlassicality(const FockState& s, bool include_vacuum) {
  const auto p = photon_number_distribution(s);
  const std::size_t first = include_vacuum ? 0 : 1;
  double best = 0.0;
  for (std::size_t m = first; m < p.size(); ++m) best = std::max(best, p[m]);
  return best;
}

}  // namespace pahs
