#include "pahs/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "pahs/error.hpp"
#include "pahs/special.hpp"

namespace pahs {

namespace {

using std::numbers::pi;

// Precomputed contraction of the amplitudes with the kernel prefactors:
//   W(x,p) = e^{-r^2}/pi * sum_{d>=0} w_d Re[(x - ip)^d * sum_n a_{n,d} L_n^d(2r^2)]
// with a_{n,d} = c_n^* c_{n+d} (-1)^n sqrt(2^d n!/(n+d)!), w_0 = 1, w_{d>0} = 2.
class LaguerreKernel {
 public:
  explicit LaguerreKernel(const FockState& s) : dim_(s.top_index() + 1) {
    coeff_.assign(dim_ * dim_, Complex{});
    for (std::size_t d = 0; d < dim_; ++d) {
      for (std::size_t n = 0; n + d < dim_; ++n) {
        const std::size_t m = n + d;
        const Complex c = std::conj(s[n]) * s[m];
        if (c == Complex{}) continue;
        const double lg = 0.5 * (static_cast<double>(d) * std::numbers::ln2 +
                                 log_factorial(static_cast<long>(n)) -
                                 log_factorial(static_cast<long>(m)));
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        coeff_[d * dim_ + n] = sign * std::exp(lg) * c;
      }
    }
    laguerre_.resize(dim_);
  }

  // Not thread-safe (uses scratch); copy per worker.
  double operator()(double x, double p) {
    const double r2 = x * x + p * p;
    const double z = 2.0 * r2;
    const Complex u(x, -p);
    Complex upow(1.0, 0.0);
    double total = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) {
      const std::size_t count = dim_ - d;
      const double a = static_cast<double>(d);
      // Upward three-term recurrence for L_n^a(z).
      laguerre_[0] = 1.0;
      if (count > 1) laguerre_[1] = 1.0 + a - z;
      for (std::size_t n = 1; n + 1 < count; ++n) {
        const double nd = static_cast<double>(n);
        laguerre_[n + 1] =
            ((2.0 * nd + 1.0 + a - z) * laguerre_[n] - (nd + a) * laguerre_[n - 1]) /
            (nd + 1.0);
      }
      Complex inner{};
      const Complex* row = &coeff_[d * dim_];
      for (std::size_t n = 0; n < count; ++n) inner += row[n] * laguerre_[n];
      const double term = (upow * inner).real();
      total += d == 0 ? term : 2.0 * term;
      upow *= u;
    }
    return std::exp(-r2) / pi * total;
  }

 private:
  std::size_t dim_;
  std::vector<Complex> coeff_;
  std::vector<double> laguerre_;
};

unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Runs body(row) for row in [0, rows), split into contiguous blocks.
void parallel_rows(std::size_t rows, unsigned threads,
                   const std::function<void(std::size_t, std::size_t)>& body) {
  const unsigned t = resolve_threads(threads, rows);
  if (t <= 1) {
    body(0, rows);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    const std::size_t begin = rows * w / t;
    const std::size_t end = rows * (w + 1) / t;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

// Zero of W along the ray (r cx, r cy) bracketed by [a, b]; Illinois-modified
// regula falsi.
double bracket_root(LaguerreKernel& kernel, double a, double fa, double b, double fb,
                    double cx, double cy) {
  int side = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const double c = (a * fb - b * fa) / (fb - fa);
    const double fc = kernel(c * cx, c * cy);
    if (fc == 0.0 || std::abs(b - a) < 1e-13) return c;
    if ((fc > 0.0) == (fb > 0.0)) {
      b = c;
      fb = fc;
      if (side == -1) fa *= 0.5;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == 1) fb *= 0.5;
      side = 1;
    }
  }
  return 0.5 * (a + b);
}

// Integral of r * f(W) along the ray at angle theta, r in [0, R]. With
// `absolute` set, panels whose end values differ in sign are split at the zero
// so every Gauss-Legendre piece sees a smooth integrand.
double ray_integral(LaguerreKernel& kernel, double theta, double cutoff, std::size_t panels,
                    const QuadratureRule& unit, bool absolute) {
  const double cx = std::cos(theta);
  const double cy = std::sin(theta);
  auto w_at = [&](double r) { return kernel(r * cx, r * cy); };
  auto piece = [&](double a, double b) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < unit.nodes.size(); ++i) {
      const double r = a + (b - a) * unit.nodes[i];
      const double w = w_at(r);
      acc.add(unit.weights[i] * r * (absolute ? std::abs(w) : w));
    }
    return (b - a) * acc.value();
  };
  const double width = cutoff / static_cast<double>(panels);
  CompensatedSum total;
  double a = 0.0;
  double fa = absolute ? w_at(a) : 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    const double b = k + 1 == panels ? cutoff : width * static_cast<double>(k + 1);
    if (!absolute) {
      total.add(piece(a, b));
      a = b;
      continue;
    }
    const double fb = w_at(b);
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
      const double root = bracket_root(kernel, a, fa, b, fb, cx, cy);
      total.add(piece(a, root));
      total.add(piece(root, b));
    } else {
      total.add(piece(a, b));
    }
    a = b;
    fa = fb;
  }
  return total.value();
}

// Product Gauss-Legendre rule in polar coordinates over the disk r <= R:
// `nodes` points along the radius and along the angle. Rays are summed in a
// fixed order so the result is independent of the thread count.
double phase_space_quadrature(const FockState& s, double cutoff, std::size_t nodes,
                              std::size_t order, unsigned threads, bool absolute) {
  const std::size_t panels = std::max<std::size_t>(1, nodes / order);
  const QuadratureRule angles = composite_gauss_legendre(panels, order, 0.0, 2.0 * pi);
  const QuadratureRule unit = gauss_legendre(order, 0.0, 1.0);
  const std::size_t n = angles.nodes.size();
  std::vector<double> ray_sums(n, 0.0);
  const LaguerreKernel proto(s);
  parallel_rows(n, threads, [&](std::size_t begin, std::size_t end) {
    LaguerreKernel kernel = proto;
    for (std::size_t i = begin; i < end; ++i) {
      ray_sums[i] = angles.weights[i] *
                    ray_integral(kernel, angles.nodes[i], cutoff, panels, unit, absolute);
    }
  });
  CompensatedSum total;
  for (double r : ray_sums) total.add(r);
  return total.value();
}

PhaseSpaceIntegral integrate_with(const FockState& s, const QuadratureSpec& spec,
                                  bool absolute) {
  if (spec.nodes_per_axis < 32 || spec.panel_order == 0) {
    throw Error(ErrorCode::InvalidParams, "quadrature needs >= 32 nodes per axis");
  }
  PhaseSpaceIntegral out;
  out.cutoff = spec.cutoff.value_or(default_cutoff(s));
  if (!(out.cutoff > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "quadrature cutoff must be positive");
  }
  out.coarse = phase_space_quadrature(s, out.cutoff, spec.nodes_per_axis, spec.panel_order,
                                      spec.threads, absolute);
  out.nodes = 2 * spec.nodes_per_axis;
  out.value = phase_space_quadrature(s, out.cutoff, out.nodes, spec.panel_order,
                                     spec.threads, absolute);
  out.delta = std::abs(out.value - out.coarse);
  out.converged = out.delta <= spec.tolerance;
  return out;
}

// Normalized oscillator eigenfunctions phi_0..phi_{D-1} at t.
void oscillator_functions(double t, std::vector<double>& phi) {
  const std::size_t dim = phi.size();
  phi[0] = std::pow(pi, -0.25) * std::exp(-0.5 * t * t);
  if (dim > 1) phi[1] = std::sqrt(2.0) * t * phi[0];
  for (std::size_t n = 1; n + 1 < dim; ++n) {
    const double nd = static_cast<double>(n);
    phi[n + 1] = std::sqrt(2.0 / (nd + 1.0)) * t * phi[n] -
                 std::sqrt(nd / (nd + 1.0)) * phi[n - 1];
  }
}

Complex wavefunction(const FockState& s, double t, std::vector<double>& phi) {
  oscillator_functions(t, phi);
  Complex psi{};
  for (std::size_t n = 0; n < phi.size(); ++n) psi += s[n] * phi[n];
  return psi;
}

double oracle_integral(const FockState& s, double x, double p, double half_width,
                       std::size_t panels) {
  constexpr std::size_t kOrder = 16;
  const QuadratureRule rule = composite_gauss_legendre(panels, kOrder, -half_width, half_width);
  std::vector<double> phi(s.top_index() + 1);
  CompensatedSum re;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = rule.nodes[i];
    const Complex left = std::conj(wavefunction(s, x + y, phi));
    const Complex right = wavefunction(s, x - y, phi);
    const Complex phase = std::polar(1.0, 2.0 * p * y);
    re.add(rule.weights[i] * (left * right * phase).real());
  }
  return re.value() / pi;
}

}  // namespace

double wigner_point(const FockState& s, double x, double p) {
  LaguerreKernel kernel(s);
  return kernel(x, p);
}

double wigner_oracle_point(const FockState& s, double x, double p) {
  const double reach = std::sqrt(2.0 * static_cast<double>(s.top_index()) + 1.0) + 8.0;
  const double half_width = reach + std::abs(x);
  constexpr double kTarget = 1e-8;
  constexpr double kFail = 1e-7;
  std::size_t panels = 16;
  double previous = oracle_integral(s, x, p, half_width, panels);
  double diff = 0.0;
  for (int level = 0; level < 5; ++level) {
    panels *= 2;
    const double current = oracle_integral(s, x, p, half_width, panels);
    diff = std::abs(current - previous);
    previous = current;
    if (diff < kTarget) return current;
  }
  if (diff > kFail) {
    std::ostringstream msg;
    msg << "direct Wigner integral at (" << x << ", " << p
        << ") did not converge, last refinement changed it by " << diff;
    throw Error(ErrorCode::QuadratureNotConverged, msg.str());
  }
  return previous;
}

double WignerGrid::x(std::size_t ix) const {
  if (extent.nx < 2) return extent.x_min;
  return extent.x_min + (extent.x_max - extent.x_min) * static_cast<double>(ix) /
                            static_cast<double>(extent.nx - 1);
}

double WignerGrid::p(std::size_t ip) const {
  if (extent.np < 2) return extent.p_min;
  return extent.p_min + (extent.p_max - extent.p_min) * static_cast<double>(ip) /
                            static_cast<double>(extent.np - 1);
}

double WignerGrid::min() const { return *std::min_element(values.begin(), values.end()); }

double WignerGrid::max() const { return *std::max_element(values.begin(), values.end()); }

double WignerGrid::integral() const {
  if (extent.nx < 2 || extent.np < 2) return 0.0;
  const double dx = (extent.x_max - extent.x_min) / static_cast<double>(extent.nx - 1);
  const double dp = (extent.p_max - extent.p_min) / static_cast<double>(extent.np - 1);
  CompensatedSum acc;
  for (std::size_t i = 0; i < extent.nx; ++i) {
    const double wx = (i == 0 || i + 1 == extent.nx) ? 0.5 : 1.0;
    for (std::size_t j = 0; j < extent.np; ++j) {
      const double wp = (j == 0 || j + 1 == extent.np) ? 0.5 : 1.0;
      acc.add(wx * wp * at(i, j));
    }
  }
  return acc.value() * dx * dp;
}

WignerGrid wigner_grid(const FockState& s, const GridExtent& extent) {
  if (extent.nx == 0 || extent.np == 0) {
    throw Error(ErrorCode::InvalidParams, "grid needs at least one node per axis");
  }
  WignerGrid grid{extent, std::vector<double>(extent.nx * extent.np)};
  const LaguerreKernel proto(s);
  parallel_rows(extent.nx, 0, [&](std::size_t begin, std::size_t end) {
    LaguerreKernel kernel = proto;
    for (std::size_t i = begin; i < end; ++i) {
      const double x = grid.x(i);
      for (std::size_t j = 0; j < extent.np; ++j) {
        grid.values[i * extent.np + j] = kernel(x, grid.p(j));
      }
    }
  });
  return grid;
}

int count_sign_changes_positive_x(const FockState& s, double x_max, std::size_t samples) {
  LaguerreKernel kernel(s);
  int changes = 0;
  int last_sign = 0;
  for (std::size_t i = 1; i <= samples; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(samples);
    const double w = kernel(x, 0.0);
    if (std::abs(w) < 1e-12) continue;
    const int sign = w > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

double default_cutoff(const FockState& s) {
  const double spread = std::max(mean_photon_number(s), static_cast<double>(s.top_index()));
  return std::sqrt(2.0 * spread) + 5.0;
}

PhaseSpaceIntegral integrate_wigner(const FockState& s, const QuadratureSpec& spec) {
  return integrate_with(s, spec, false);
}

PhaseSpaceIntegral integrate_abs_wigner(const FockState& s, const QuadratureSpec& spec) {
  return integrate_with(s, spec, true);
}

LogNegativity evaluate_log_negativity(const FockState& s, const QuadratureSpec& spec) {
  LogNegativity out;
  out.integral = integrate_abs_wigner(s, spec);
  out.value = std::log(out.integral.value);
  // Report the refinement change on the log scale the caller sees.
  out.integral.delta = std::abs(out.value - std::log(out.integral.coarse));
  out.integral.converged = out.integral.delta <= spec.tolerance;
  return out;
}

LogNegativity wigner_log_negativity(const FockState& s, const QuadratureSpec& spec) {
  LogNegativity out = evaluate_log_negativity(s, spec);
  if (!out.integral.converged) {
    std::ostringstream msg;
    msg << "Wigner log-negativity changed by " << out.integral.delta
        << " when doubling to " << out.integral.nodes << " nodes per axis";
    throw Error(ErrorCode::QuadratureNotConverged, msg.str());
  }
  return out;
}

}  // namespace pahs
