#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "pahs/error.hpp"
#include "pahs/fock.hpp"
#include "pahs/states.hpp"

using namespace pahs;

namespace {

double norm_squared(const FockState& s) {
  double n = 0.0;
  for (const auto& c : s.amplitudes()) n += std::norm(c);
  return n;
}

}  // namespace

TEST_CASE("normalize rescales to unit norm") {
  const std::vector<double> raw = {2.0, 0.0, 0.0};
  const auto s = FockState::normalized(raw);
  CHECK(s.dim() == 3);
  CHECK(s[0] == Complex(1.0, 0.0));
  CHECK(s[1] == Complex(0.0, 0.0));

  const std::vector<double> pair = {1.0, 1.0};
  const auto t = FockState::normalized(pair);
  CHECK(t[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(t[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  const auto c = FockState::normalized(std::vector<Complex>{{3.0, 4.0}, {0.0, 12.0}});
  CHECK(norm_squared(c) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c[0] == Complex(3.0 / 13.0, 4.0 / 13.0));
}

TEST_CASE("normalize rejects zero and empty input") {
  const std::vector<double> zeros = {0.0, 0.0};
  CHECK_THROWS_AS(FockState::normalized(zeros), Error);
  try {
    FockState::normalized(zeros);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroState);
  }
  CHECK_THROWS_AS(FockState::normalized(std::vector<Complex>{}), Error);
  const std::vector<double> tiny = {1e-301};
  CHECK_THROWS_AS(FockState::normalized(tiny), Error);
}

TEST_CASE("add_photons on vacuum and identity") {
  const auto one = add_photons(fock(0, 1), 1);
  CHECK(one.dim() == 2);
  CHECK(std::abs(one[1] - Complex(1.0, 0.0)) < 1e-15);
  CHECK(one[0] == Complex(0.0, 0.0));

  for (int k = 0; k <= 6; ++k) {
    const auto s = add_photons(fock(0, 1), k);
    CHECK(fidelity(s, fock(k, k + 1)) == doctest::Approx(1.0).epsilon(1e-15));
  }

  const auto h = hypergeometric({20.0, 3, 0.5, 0});
  const auto same = add_photons(h, 0);
  REQUIRE(same.dim() == h.dim());
  for (std::size_t n = 0; n < h.dim(); ++n) CHECK(same[n] == h[n]);

  CHECK_THROWS_AS(add_photons(h, -1), Error);
}

TEST_CASE("add_photons applies sqrt((n+k)!/n!) weights") {
  const std::vector<double> raw = {0.3, -0.5, 0.2, 0.7};
  const auto s = FockState::normalized(raw);
  const int k = 3;
  const auto out = add_photons(s, k);
  REQUIRE(out.dim() == s.dim() + k);
  for (int n = 0; n < k; ++n) CHECK(out[n] == Complex(0.0, 0.0));

  // Independent oracle: multiply by sqrt((n+1)(n+2)...(n+k)) and renormalize.
  std::vector<double> expect(s.dim() + k, 0.0);
  double norm = 0.0;
  for (std::size_t n = 0; n < s.dim(); ++n) {
    double w = 1.0;
    for (int j = 1; j <= k; ++j) w *= static_cast<double>(n + j);
    expect[n + k] = s[n].real() * std::sqrt(w);
    norm += expect[n + k] * expect[n + k];
  }
  for (std::size_t n = 0; n < expect.size(); ++n) {
    CHECK(out[n].real() == doctest::Approx(expect[n] / std::sqrt(norm)).epsilon(1e-14));
    CHECK(out[n].imag() == 0.0);
  }
  CHECK(norm_squared(out) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("photon statistics") {
  const auto h = hypergeometric({20.0, 3, 0.5, 0});
  const auto pnd = photon_number_distribution(h);
  const double expected[] = {120.0 / 1140, 450.0 / 1140, 450.0 / 1140, 120.0 / 1140};
  for (int n = 0; n < 4; ++n) CHECK(pnd[n] == doctest::Approx(expected[n]).epsilon(1e-12));
  CHECK(mean_photon_number(h) == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(mean_photon_number(fock(4, 7)) == 4.0);
}

TEST_CASE("overlap and fidelity zero-pad the shorter state") {
  const auto a = fock(1, 2);
  const auto b = FockState::normalized(std::vector<double>{0.0, 1.0, 1.0});
  CHECK(std::abs(overlap(a, b) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  CHECK(fidelity(a, b) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fidelity(b, a) == doctest::Approx(0.5).epsilon(1e-15));
  const auto c = FockState::normalized(std::vector<Complex>{{0.0, 1.0}});
  CHECK(std::abs(overlap(c, fock(0, 1)) - Complex(0.0, -1.0)) < 1e-15);
}

TEST_CASE("top_index") {
  CHECK(fock(3, 6).top_index() == 3);
  CHECK(add_photons(fock(0, 1), 2).top_index() == 2);
}
