#include "ouk/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ouk/exact.hpp"
#include "ouk/kernels.hpp"

namespace ouk {

std::pair<double, double> lemma62_check(double alpha, double t, const Eigen::VectorXd& x,
                                        const Eigen::VectorXd& y) {
  if (!(alpha > 1)) throw std::domain_error("lemma62_check: alpha must be > 1");
  if (!(t > 0)) throw std::domain_error("lemma62_check: t must be > 0");
  if (x.size() != y.size() || x.size() == 0)
    throw std::invalid_argument("lemma62_check: x and y must be non-empty with equal length");

  const double af = -std::expm1(-2.0 * t / alpha);  // 1 - e^{-2t/alpha}
  const double as = -std::expm1(-2.0 * t);          // 1 - e^{-2t}
  const double e2t = std::exp(-2.0 * t);

  const double fast = (std::exp(-t / alpha) * x - y).squaredNorm();
  const double slow = (std::exp(-t) * x - y).squaredNorm();
  const double minxy = std::min(x.squaredNorm(), y.squaredNorm());

  const double lhs = fast / af;
  const double rhs = 0.5 * alpha * e2t * slow / as - t * t * minxy / af;
  const double slack1 = lhs - rhs;

  const double ratio = as / af;
  const double slack2 = std::min(ratio - alpha * e2t, alpha - ratio);
  return {slack1, slack2};
}

namespace {

struct LogDenominator {
  double log_alpha_part;  // log(alpha) + alpha C^2 / 2
  double decay;           // alpha / (8 e^{2T})
};

double log_abs_kernel(const BoundSweepSpec& spec, SweepKernel which, double t,
                      const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  KernelQuery q{t * t / spec.alpha, spec.order, x, y};
  if (which == SweepKernel::K) {
    SplitKernel k = derivative_kernel_split(q);
    return 2.0 * spec.order * std::log(t) + k.log_gaussian + std::log(std::abs(k.polynomial));
  }
  SplitKernel k = derivative_kernel_dx_split(q, spec.deriv_coordinate);
  return (2.0 * spec.order + 1.0) * std::log(t) + k.log_gaussian +
         std::log(std::abs(k.polynomial));
}

}  // namespace

BoundReport theorem63_sweep(const BoundSweepSpec& spec, SweepKernel which) {
  if (!(spec.alpha > 1)) throw std::domain_error("theorem63_sweep: alpha must be > 1");
  if (spec.order < 0) throw std::invalid_argument("theorem63_sweep: order must be >= 0");
  if (spec.dim < 1) throw std::invalid_argument("theorem63_sweep: dim must be >= 1");
  if (which == SweepKernel::KTilde &&
      (spec.deriv_coordinate < 1 || spec.deriv_coordinate > spec.dim))
    throw std::invalid_argument("theorem63_sweep: deriv_coordinate must be in 1..dim");

  const double e2T = std::exp(2.0 * spec.T);
  if (!(spec.alpha >= 8.0 * e2T))
    throw OutOfHypothesisError("alpha below largeness threshold 8 e^{2T}");
  for (int it = 0; it < spec.t_grid.count; ++it) {
    const double t = spec.t_grid.at(it);
    if (!(t > 0) || !(t < spec.T))
      throw std::domain_error("theorem63_sweep: t grid must lie in (0, T)");
    const double u = t * t / spec.alpha;
    if (!(-std::expm1(-2.0 * u) >= u))
      throw OutOfHypothesisError("alpha too small for 1 - e^{-2t^2/alpha} >= t^2/alpha");
  }

  const LogDenominator den{std::log(spec.alpha) + 0.5 * spec.alpha * spec.C * spec.C,
                           spec.alpha / (8.0 * e2T)};

  // Lexicographic grid order: t, then x digits, then y digits; ties in the
  // max are broken by the first point visited.
  const int d = spec.dim;
  const long long nx = static_cast<long long>(std::pow(spec.x_grid.count, d));
  const long long ny = static_cast<long long>(std::pow(spec.y_grid.count, d));

  auto decode = [&](long long code, const GridRange& g, Eigen::VectorXd& v) {
    for (int i = d - 1; i >= 0; --i) {
      v[i] = g.at(static_cast<int>(code % g.count));
      code /= g.count;
    }
  };

  BoundReport rep;
  rep.argmax_x = Eigen::VectorXd::Zero(d);
  rep.argmax_y = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd x(d), y(d);
  bool found = false;

  for (int it = 0; it < spec.t_grid.count; ++it) {
    const double t = spec.t_grid.at(it);
    const double ts = t * t;
    const double a2 = -std::expm1(-2.0 * ts);
    const double emts = std::exp(-ts);
    for (long long cx = 0; cx < nx; ++cx) {
      decode(cx, spec.x_grid, x);
      if (t * x.norm() > spec.C) continue;
      for (long long cy = 0; cy < ny; ++cy) {
        decode(cy, spec.y_grid, y);
        const double quad = (emts * x - y).squaredNorm() / a2;
        const double log_den =
            den.log_alpha_part + log_mehler_kernel(ts, x, y) - den.decay * quad;
        const double log_ratio = log_abs_kernel(spec, which, t, x, y) - log_den;
        const double ratio = std::exp(log_ratio);
        ++rep.samples;
        if (!std::isfinite(ratio) || ratio > spec.ratio_cap) {
          ++rep.violations;
        }
        if (std::isfinite(ratio) && (!found || ratio > rep.max_ratio)) {
          found = true;
          rep.max_ratio = ratio;
          rep.argmax_t = t;
          rep.argmax_x = x;
          rep.argmax_y = y;
        }
      }
    }
  }
  if (rep.samples == 0)
    throw EmptyGridError("constraint t |x| <= C excluded every grid point");
  return rep;
}

CalderonResult calderon_constant(int order, double alpha, const std::vector<int>& eigenvalues,
                                 int quad_points) {
  if (order < 0) throw std::invalid_argument("calderon_constant: order must be >= 0");
  if (!(alpha > 1)) throw std::domain_error("calderon_constant: alpha must be > 1");
  if (eigenvalues.empty())
    throw std::invalid_argument("calderon_constant: eigenvalue list must be non-empty");
  for (int n : eigenvalues)
    if (n < 1) throw std::invalid_argument("calderon_constant: eigenvalues must be >= 1");
  if (quad_points < 16) throw std::invalid_argument("calderon_constant: too few points");

  // After t = e^u the integrand is exp((N+1)(log n + 2u) - (n/alpha) e^{2u}):
  // exponentially small to the left of its peak and doubly exponentially
  // small to the right, so the trapezoid rule converges spectrally.
  auto integral = [&](int n) {
    const double u_peak = 0.5 * std::log((order + 1.0) * alpha / n);
    const double lo = u_peak - 45.0 / (order + 1.0);
    const double hi = u_peak + 4.0;
    const double h = (hi - lo) / (quad_points - 1);
    double acc = 0.0;
    for (int i = 0; i < quad_points; ++i) {
      const double u = lo + i * h;
      const double e2u = std::exp(2.0 * u);
      double g = std::exp((order + 1.0) * std::log(n * e2u) - n * e2u / alpha);
      if (i == 0 || i == quad_points - 1) g *= 0.5;
      acc += g;
    }
    return acc * h;
  };

  CalderonResult res;
  std::vector<double> values(eigenvalues.size());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) values[i] = integral(eigenvalues[i]);
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  res.integral_value = mean;
  res.constant = 1.0 / mean;
  for (double v : values)
    res.max_deviation = std::max(res.max_deviation, std::abs(v - values[0]));
  res.closed_form = std::pow(alpha, order + 1) * to_double(factorial(order)) / 2.0;
  return res;
}

}  // namespace ouk
