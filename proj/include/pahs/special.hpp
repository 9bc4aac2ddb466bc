#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pahs {

/// ln(n!) for n >= 0.
double log_factorial(long n);

/// ln of the generalized binomial coefficient x(x-1)...(x-n+1)/n! for real x.
///
/// Returns -infinity when one of the falling-factorial factors is zero, i.e.
/// the coefficient vanishes exactly. Throws NegativeCoefficient when a factor
/// is negative (beyond -1e-12) and no factor is zero.
double log_binomial_real(double x, long n);

/// Same as log_binomial_real, but a negative lower index gives -infinity.
double log_binomial_or_zero(double x, long n);

/// ln(sum(exp(v))) without overflow. Empty or all -inf input gives -inf.
double log_sum_exp(std::span<const double> values);

/// Neumaier-compensated running sum; the result does not depend on the
/// magnitude ordering of the terms to first order.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(std::size_t n, double a, double b);

/// Composite Gauss-Legendre: `panels` equal panels of `order` points each.
QuadratureRule composite_gauss_legendre(std::size_t panels, std::size_t order,
                                        double a, double b);

}  // namespace pahs
