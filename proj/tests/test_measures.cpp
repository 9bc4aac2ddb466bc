#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "pahs/measures.hpp"
#include "pahs/states.hpp"

using namespace pahs;

TEST_CASE("mu of number states") {
  CHECK(sps_quality_mu(fock(1, 2)).kind == SpsQuality::Kind::Infinite);
  CHECK(sps_quality_mu(fock(0, 1)).kind == SpsQuality::Kind::Undefined);
  const auto two = sps_quality_mu(fock(2, 3));
  CHECK(two.is_finite());
  CHECK(two.value == 0.0);
}

TEST_CASE("mu vanishes exactly after two or more added photons") {
  for (int k = 2; k <= 4; ++k) {
    for (double eta : {0.1, 0.5, 0.9}) {
      const auto mu = sps_quality_mu(
          photon_added_hypergeometric({pinned_population(5, eta, 2.0), 5, eta, k}));
      CHECK(mu.is_finite());
      CHECK(mu.value == 0.0);
    }
  }
}

TEST_CASE("mu of a coherent state matches the Poisson formula") {
  for (double alpha : {0.5, 1.0, 1.7}) {
    const double a2 = alpha * alpha;
    const double expect = a2 * std::exp(-a2) / (1.0 - std::exp(-a2) * (1.0 + a2));
    const auto mu = sps_quality_mu(coherent_truncated(alpha, 40));
    REQUIRE(mu.is_finite());
    CHECK(mu.value == doctest::Approx(expect).epsilon(1e-10));
  }
  const auto mu1 = sps_quality_mu(coherent_truncated(1.0, 40));
  CHECK(mu1.value == doctest::Approx(1.392).epsilon(1e-3));
}

TEST_CASE("mu is invariant under global phase and tail redistribution") {
  const std::vector<double> a = {0.4, 0.6, 0.3, 0.5, 0.2};
  const auto s = FockState::normalized(a);
  std::vector<Complex> phased;
  for (double v : a) phased.emplace_back(v * std::cos(0.7), v * std::sin(0.7));
  CHECK(sps_quality_mu(FockState::normalized(phased)).value ==
        doctest::Approx(sps_quality_mu(s).value).epsilon(1e-14));
  // Move all multiphoton mass into level 4 while keeping its total.
  const double tail = 0.3 * 0.3 + 0.5 * 0.5 + 0.2 * 0.2;
  const std::vector<double> b = {0.4, 0.6, 0.0, 0.0, std::sqrt(tail)};
  CHECK(sps_quality_mu(FockState::normalized(b)).value ==
        doctest::Approx(sps_quality_mu(s).value).epsilon(1e-14));
}

TEST_CASE("photon addition lowers mu across eta") {
  for (int i = 1; i <= 19; ++i) {
    const double eta = 0.05 * i;
    const double L = pinned_population(5, eta, 2.0);
    const auto m0 = sps_quality_mu(photon_added_hypergeometric({L, 5, eta, 0}));
    const auto m1 = sps_quality_mu(photon_added_hypergeometric({L, 5, eta, 1}));
    REQUIRE(m0.is_finite());
    REQUIRE(m1.is_finite());
    CHECK(m1.value <= m0.value);
  }
}

TEST_CASE("anticlassicality") {
  CHECK(anticlassicality(fock(0, 1), false) == 0.0);
  CHECK(anticlassicality(fock(0, 1), true) == 1.0);
  for (int n = 1; n <= 5; ++n) CHECK(anticlassicality(fock(n, n + 1), false) == 1.0);
  const auto h = hypergeometric({20.0, 3, 0.5, 0});
  CHECK(anticlassicality(h, false) == doctest::Approx(450.0 / 1140.0).epsilon(1e-13));
  const auto b = binomial(3, 0.1);  // p0 = 0.729 dominates
  CHECK(anticlassicality(b, true) == doctest::Approx(0.729).epsilon(1e-13));
  CHECK(anticlassicality(b, false) == doctest::Approx(0.243).epsilon(1e-13));
}

TEST_CASE("anticlassicality ordering invariant") {
  for (double eta : {0.1, 0.3, 0.6, 0.9}) {
    for (int k = 0; k <= 3; ++k) {
      const auto s = photon_added_hypergeometric({pinned_population(6, eta, 2.0), 6, eta, k});
      const double a = anticlassicality(s, false);
      const double av = anticlassicality(s, true);
      CHECK(0.0 <= a);
      CHECK(a <= av);
      CHECK(av <= 1.0);
    }
  }
}

TEST_CASE("anticlassicality decreases with M at fixed eta and k") {
  for (int k = 0; k <= 3; ++k) {
    double last = 2.0;
    for (int M : {5, 10, 15, 20, 25}) {
      const double a = anticlassicality(
          photon_added_hypergeometric({pinned_population(M, 0.18, 2.0), M, 0.18, k}), false);
      CHECK(a <= last);
      last = a;
    }
  }
}
