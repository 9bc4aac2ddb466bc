#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pahs/entanglement.hpp"
#include "pahs/report.hpp"

using namespace pahs;

TEST_CASE("vacuum report") {
  const auto r = measure_state(fock(0, 1), {});
  CHECK(r.mean_n == 0.0);
  REQUIRE(r.mu);
  CHECK(r.mu->kind == SpsQuality::Kind::Undefined);
  CHECK(*r.anticlassicality == 0.0);
  CHECK(*r.anticlassicality_with_vacuum == 1.0);
  CHECK(std::abs(*r.concurrence) <= 1e-12);
  REQUIRE(r.wln);
  CHECK(std::abs(r.wln->value) <= 1e-4);
  CHECK(r.wln->integral.converged);
}

TEST_CASE("single-photon report") {
  const auto r = measure_state(fock(1, 2), {});
  CHECK(r.mu->kind == SpsQuality::Kind::Infinite);
  CHECK(*r.anticlassicality == 1.0);
  CHECK(std::abs(*r.concurrence - 1.0) <= 1e-12);
  CHECK(r.wln->value == doctest::Approx(std::log(4.0 * std::exp(-0.5) - 1.0)).epsilon(1e-7));
}

TEST_CASE("selection and closed-form concurrence") {
  const HypergeometricParams p{pinned_population(10, 0.9, 2.0), 10, 0.9, 1};
  const auto s = photon_added_hypergeometric(p);
  MeasureSelection only_mu{true, false, false, false};
  const auto a = measure_state(s, only_mu);
  CHECK(a.mu);
  CHECK_FALSE(a.anticlassicality);
  CHECK_FALSE(a.concurrence);
  CHECK_FALSE(a.wln);

  const auto full = measure_state(s, {}, {}, p);
  CHECK(full.mu->is_finite());
  CHECK(*full.concurrence > 0.0);
  CHECK(*full.concurrence == doctest::Approx(concurrence_potential(s)).epsilon(1e-9));
  CHECK(full.wln->value > 0.0);
  CHECK(full.mean_n == doctest::Approx(mean_photon_number(s)));
}
