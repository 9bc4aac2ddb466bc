#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "pahs/error.hpp"
#include "pahs/special.hpp"

using namespace pahs;

namespace {

// Exact integer binomial by the multiplicative formula.
double exact_binomial(long n, long r) {
  double out = 1.0;
  for (long j = 1; j <= r; ++j) out = out * static_cast<double>(n - r + j) / static_cast<double>(j);
  return out;
}

}  // namespace

TEST_CASE("log_factorial matches direct products") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
  double acc = 0.0;
  for (long n = 1; n <= 170; ++n) {
    acc += std::log(static_cast<double>(n));
    CHECK(log_factorial(n) == doctest::Approx(acc).epsilon(1e-13));
  }
}

TEST_CASE("log_binomial_real on integer and real upper arguments") {
  CHECK(log_binomial_real(5.0, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-15));
  CHECK(log_binomial_real(3.5, 0) == 0.0);
  CHECK(log_binomial_real(7.2, 3) ==
        doctest::Approx(std::log(7.2 * 6.2 * 5.2 / 6.0)).epsilon(1e-14));
}

TEST_CASE("log_binomial_real agrees with exact integer binomials") {
  for (long n = 0; n <= 60; ++n) {
    for (long r = 0; r <= n; ++r) {
      const double expected = std::log(exact_binomial(n, r));
      const double got = log_binomial_real(static_cast<double>(n), r);
      CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("log_binomial_real vanishing and invalid coefficients") {
  // C(3, 5) = 0 because the falling factorial passes through zero.
  CHECK(log_binomial_real(3.0, 5) == -std::numeric_limits<double>::infinity());
  // 2.5 * 1.5 * 0.5 * (-0.5) / 4! is negative: a parameter bug upstream.
  CHECK_THROWS_AS(log_binomial_real(2.5, 4), Error);
  try {
    log_binomial_real(2.5, 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeCoefficient);
  }
  CHECK(log_binomial_or_zero(5.0, -1) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("log_binomial_real handles large populations") {
  // C(1e8, 3) ~ 1e24 / 6: no overflow in log space.
  const double x = 1e8;
  const double expected = std::log(x) + std::log(x - 1) + std::log(x - 2) - std::log(6.0);
  CHECK(log_binomial_real(x, 3) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("log_sum_exp") {
  const std::vector<double> v = {1000.0, 1000.0};
  CHECK(log_sum_exp(v) == doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
  const std::vector<double> ninf = {-std::numeric_limits<double>::infinity()};
  CHECK(log_sum_exp(ninf) == -std::numeric_limits<double>::infinity());
  CHECK(log_sum_exp(std::vector<double>{}) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("CompensatedSum recovers cancelled low-order terms") {
  CompensatedSum s;
  s.add(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  CHECK(s.value() == 2.0);
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u}) {
    const auto rule = gauss_legendre(n, -1.0, 3.0);
    REQUIRE(rule.nodes.size() == n);
    for (std::size_t deg = 0; deg < 2 * n; ++deg) {
      double got = 0.0;
      for (std::size_t i = 0; i < n; ++i) got += rule.weights[i] * std::pow(rule.nodes[i], double(deg));
      const double exact = (std::pow(3.0, double(deg + 1)) - std::pow(-1.0, double(deg + 1))) /
                           double(deg + 1);
      CHECK(got == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("composite_gauss_legendre integrates a Gaussian") {
  const auto rule = composite_gauss_legendre(32, 8, -10.0, 10.0);
  CHECK(rule.nodes.size() == 256);
  double got = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    got += rule.weights[i] * std::exp(-rule.nodes[i] * rule.nodes[i]);
  }
  CHECK(got == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
}
