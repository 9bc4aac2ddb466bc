#pragma once

#include "pahs/fock.hpp"

namespace pahs {

/// Single-photon-source quality mu = P1 / (1 - P0 - P1).
struct SpsQuality {
  enum class Kind { Finite, Infinite, Undefined };

  Kind kind = Kind::Finite;
  double value = 0.0;  // meaningful only for Kind::Finite

  bool is_finite() const noexcept { return kind == Kind::Finite; }
};

/// Denominator below 1e-14 with P1 > 0 is an ideal source (Infinite); both
/// numerator and denominator below 1e-14 (vacuum) is Undefined.
SpsQuality sps_quality_mu(const FockState& s);

/// max_{m>0} p_m, or max over all m when include_vacuum is set.
double anticlassicality(const FockState& s, bool include_vacuum);

}  // namespace pahs
