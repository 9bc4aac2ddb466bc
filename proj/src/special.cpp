#include "pahs/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "pahs/error.hpp"

namespace pahs {

namespace {

constexpr double kFactorTolerance = 1e-12;

// glibc's lgamma writes the global signgam; the reentrant form does not.
double lgamma_positive(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
  }
  return "Unknown";
}

double log_factorial(long n) {
  if (n < 0) {
    throw Error(ErrorCode::IndexOutOfRange, "log_factorial of negative integer");
  }
  if (n < 2) return 0.0;
  return lgamma_positive(static_cast<double>(n) + 1.0);
}

double log_binomial_real(double x, long n) {
  if (n < 0) {
    throw Error(ErrorCode::IndexOutOfRange, "negative lower binomial index");
  }
  // A zero factor wins over negative ones: the product is exactly zero.
  bool negative = false;
  for (long j = 0; j < n; ++j) {
    const double f = x - static_cast<double>(j);
    if (std::abs(f) <= kFactorTolerance) {
      return -std::numeric_limits<double>::infinity();
    }
    if (f < 0.0) negative = true;
  }
  if (negative) {
    std::ostringstream msg;
    msg << "binomial(" << x << ", " << n << ") has a negative falling factorial";
    throw Error(ErrorCode::NegativeCoefficient, msg.str());
  }
  CompensatedSum acc;
  for (long j = 0; j < n; ++j) acc.add(std::log(x - static_cast<double>(j)));
  return acc.value() - log_factorial(n);
}

double log_binomial_or_zero(double x, long n) {
  if (n < 0) return -std::numeric_limits<double>::infinity();
  return log_binomial_real(x, n);
}

double log_sum_exp(std::span<const double> values) {
  const double neg_inf = -std::numeric_limits<double>::infinity();
  double top = neg_inf;
  for (double v : values) top = std::max(top, v);
  if (top == neg_inf) return neg_inf;
  CompensatedSum acc;
  for (double v : values) {
    if (v != neg_inf) acc.add(std::exp(v - top));
  }
  return top + std::log(acc.value());
}

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    carry_ += (sum_ - t) + v;
  } else {
    carry_ += (v - t) + sum_;
  }
  sum_ = t;
}

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        const double jd = static_cast<double>(j);
        p0 = ((2.0 * jd - 1.0) * z * p1 - (jd - 1.0) * p2) / jd;
      }
      dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // Refresh the derivative at the converged root.
    {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        const double jd = static_cast<double>(j);
        p0 = ((2.0 * jd - 1.0) * z * p1 - (jd - 1.0) * p2) / jd;
      }
      dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

QuadratureRule composite_gauss_legendre(std::size_t panels, std::size_t order,
                                        double a, double b) {
  QuadratureRule rule;
  rule.nodes.reserve(panels * order);
  rule.weights.reserve(panels * order);
  const double width = (b - a) / static_cast<double>(panels);
  const QuadratureRule ref = gauss_legendre(order, 0.0, width);
  for (std::size_t p = 0; p < panels; ++p) {
    const double left = a + width * static_cast<double>(p);
    for (std::size_t i = 0; i < order; ++i) {
      rule.nodes.push_back(left + ref.nodes[i]);
      rule.weights.push_back(ref.weights[i]);
    }
  }
  return rule;
}

}  // namespace pahs
