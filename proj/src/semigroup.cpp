#include "ouk/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ouk/combinatorics.hpp"
#include "ouk/kernels.hpp"

namespace ouk {

namespace {

void step_odometer(std::vector<int>& digits, int base, bool& done) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < base) return;
    digits[i] = 0;
  }
  done = true;
}

}  // namespace

double apply_semigroup_derivative(const SampledFunction& u, double t, int order,
                                  const Eigen::VectorXd& x, const QuadratureRule& rule) {
  if (!(t > 0)) throw std::domain_error("apply_semigroup_derivative: t must be > 0");
  if (order < 0) throw std::invalid_argument("apply_semigroup_derivative: order must be >= 0");
  const int d = static_cast<int>(x.size());
  if (u.dim != d) throw std::invalid_argument("apply_semigroup_derivative: dimension mismatch");

  const double a2 = -std::expm1(-2.0 * t);
  const double width = std::sqrt(a2);
  const double emt = std::exp(-t);
  const int q = rule.order();

  // Shifted nodes y_i(k) = e^{-t} x_i + width * xi_k; on them the bracket's
  // Hermite argument (x_i e^{-t} - y_i) / width is just -xi_k.
  std::vector<std::vector<double>> bracket(d);  // [coordinate][order * q + node]
  std::vector<std::vector<double>> ynodes(d);
  for (int i = 0; i < d; ++i) {
    bracket[i].resize((order + 1) * q);
    ynodes[i].resize(q);
    for (int k = 0; k < q; ++k) {
      ynodes[i][k] = emt * x[i] + width * rule.nodes[k];
      for (int n = 0; n <= order; ++n)
        bracket[i][n * q + k] = kernel_bracket_1d(t, n, x[i], ynodes[i][k]);
    }
  }

  const auto comps = compositions(order, d);
  std::vector<double> multinom(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    multinom[c] = to_double(multinomial(order, comps[c]));

  Eigen::VectorXd y(d);
  std::vector<int> digits(d, 0);
  bool done = false;
  double acc = 0.0;
  while (!done) {
    double w = 1.0;
    for (int i = 0; i < d; ++i) {
      w *= rule.weights[digits[i]];
      y[i] = ynodes[i][digits[i]];
    }
    double kernel_poly = 0.0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      double prod = multinom[c];
      for (int i = 0; i < d; ++i) prod *= bracket[i][comps[c][i] * q + digits[i]];
      kernel_poly += prod;
    }
    acc += w * kernel_poly * u.evaluator(y);
    step_odometer(digits, q, done);
  }
  return acc;
}

double eigenfunction_check(const MultiIndex& alpha, double t, int order,
                           const std::vector<Eigen::VectorXd>& x_points,
                           const QuadratureRule& rule) {
  if (!(t > 0)) throw std::domain_error("eigenfunction_check: t must be > 0");
  SampledFunction u{
      [&alpha](const Eigen::VectorXd& y) { return hermite_multi(alpha, y, true); },
      alpha.dim()};
  const double lam = -static_cast<double>(alpha.order());
  const double factor = std::pow(lam, order) * std::exp(-t * alpha.order());
  double worst = 0.0;
  for (const auto& x : x_points) {
    double got = apply_semigroup_derivative(u, t, order, x, rule);
    double expected = factor * hermite_multi(alpha, x, true);
    double res = std::abs(got - expected) /
                 std::max(1.0, std::abs(hermite_multi(alpha, x, true)));
    worst = std::max(worst, res);
  }
  return worst;
}

double multinomial_reduction_check(const MultiIndex& alpha, double t, int order,
                                   const Eigen::VectorXd& x) {
  if (!(t > 0)) throw std::domain_error("multinomial_reduction_check: t must be > 0");
  const int d = alpha.dim();
  if (x.size() != d) throw std::invalid_argument("multinomial_reduction_check: dimension mismatch");

  std::vector<double> h(d);
  for (int i = 0; i < d; ++i) h[i] = hermite_normalized(alpha[i], x[i]);

  double lhs = std::pow(static_cast<double>(alpha.order()), order) *
               std::exp(-t * alpha.order());
  for (int i = 0; i < d; ++i) lhs *= h[i];

  double rhs = 0.0;
  for (const MultiIndex& n : compositions(order, d)) {
    double term = to_double(multinomial(order, n));
    for (int i = 0; i < d; ++i)
      term *= std::pow(static_cast<double>(alpha[i]), n[i]) * std::exp(-t * alpha[i]) * h[i];
    rhs += term;
  }
  return relative_deviation(lhs, rhs);
}

double compose_kernels(double s, int order_s, double t, int order_t, double x, double y,
                       const QuadratureRule& rule) {
  if (!(s > 0) || !(t > 0)) throw std::domain_error("compose_kernels: times must be > 0");

  const double as2 = -std::expm1(-2.0 * s), at2 = -std::expm1(-2.0 * t);
  const double ems = std::exp(-s), emt = std::exp(-t);
  const double a = x * ems;

  // M_s(x, z) dgamma(z) = pi^{-1/2} as^{-1} exp(-(z - a)^2 / as^2) dz and
  // M_t(z, y) = at^{-1} exp(-(z e^{-t} - y)^2 / at^2) e^{y^2}; the combined
  // exponent is -p (z - mu)^2 + C.
  const double p = 1.0 / as2 + emt * emt / at2;
  const double mu = (a / as2 + y * emt / at2) / p;
  const double C = p * mu * mu - a * a / as2 - y * y / at2;
  const double prefactor =
      std::exp(y * y + C) / (std::sqrt(as2) * std::sqrt(at2) * std::sqrt(p));

  double acc = 0.0;
  for (int k = 0; k < rule.order(); ++k) {
    const double z = mu + rule.nodes[k] / std::sqrt(p);
    acc += rule.weights[k] * kernel_bracket_1d(s, order_s, x, z) *
           kernel_bracket_1d(t, order_t, z, y);
  }
  return prefactor * acc;
}

}  // namespace ouk
