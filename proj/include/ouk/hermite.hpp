#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ouk/exact.hpp"
#include "ouk/multi_index.hpp"

namespace ouk {

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}, H_0 = 1, H_1 = 2x.  The recurrence is
/// upward stable for the dominant (polynomial) solution.
template <typename Scalar>
Scalar hermite(int n, Scalar x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
  Scalar p0 = 1, p1 = 2 * x;
  if (n == 0) return p0;
  for (int k = 1; k < n; ++k) {
    Scalar next = 2 * x * p1 - Scalar(2 * k) * p0;
    p0 = p1;
    p1 = next;
  }
  return p1;
}

/// h_n(x) = H_n(x) / sqrt(2^n n!), evaluated through the directly normalized
/// recurrence h_{n+1} = x sqrt(2/(n+1)) h_n - sqrt(n/(n+1)) h_{n-1} so that
/// neither H_n nor the normalization constant is formed separately.
template <typename Scalar>
Scalar hermite_normalized(int n, Scalar x) {
  if (n < 0) throw std::invalid_argument("hermite_normalized: n must be >= 0");
  using std::sqrt;
  Scalar p0 = 1;
  if (n == 0) return p0;
  Scalar p1 = sqrt(Scalar(2)) * x;
  for (int k = 1; k < n; ++k) {
    Scalar next = x * sqrt(Scalar(2) / Scalar(k + 1)) * p1 - sqrt(Scalar(k) / Scalar(k + 1)) * p0;
    p0 = p1;
    p1 = next;
  }
  return p1;
}

/// H_n'(x) = 2n H_{n-1}(x); zero for n = 0.
template <typename Scalar>
Scalar hermite_derivative(int n, Scalar x) {
  if (n < 0) throw std::invalid_argument("hermite_derivative: n must be >= 0");
  if (n == 0) return Scalar(0);
  return Scalar(2 * n) * hermite(n - 1, x);
}

/// Values H_0(x) .. H_max(x) in one sweep.
template <typename Scalar>
std::vector<Scalar> hermite_sequence(int max_degree, Scalar x) {
  std::vector<Scalar> h(max_degree + 1);
  h[0] = 1;
  if (max_degree >= 1) h[1] = 2 * x;
  for (int k = 1; k < max_degree; ++k) h[k + 1] = 2 * x * h[k] - Scalar(2 * k) * h[k - 1];
  return h;
}

/// Values h_0(x) .. h_max(x) in one sweep (normalized recurrence).
template <typename Scalar>
std::vector<Scalar> hermite_normalized_sequence(int max_degree, Scalar x) {
  using std::sqrt;
  std::vector<Scalar> h(max_degree + 1);
  h[0] = 1;
  if (max_degree >= 1) h[1] = sqrt(Scalar(2)) * x;
  for (int k = 1; k < max_degree; ++k)
    h[k + 1] = x * sqrt(Scalar(2) / Scalar(k + 1)) * h[k] - sqrt(Scalar(k) / Scalar(k + 1)) * h[k - 1];
  return h;
}

/// Tensor Hermite value: prod_i H_{alpha_i}(x_i), or prod_i h_{alpha_i}(x_i)
/// when normalized.  The normalized variant equals the unnormalized one
/// divided by sqrt(2^|alpha| alpha!).
double hermite_multi(const MultiIndex& alpha, const Eigen::VectorXd& x, bool normalized);

/// Gauss-Hermite rule normalized to the Gaussian probability measure
/// dgamma(x) = pi^(-1/2) exp(-x^2) dx: sum_i weights[i] f(nodes[i])
/// integrates polynomials of degree <= 2*order - 1 exactly and the weights
/// sum to 1.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  int order() const { return static_cast<int>(nodes.size()); }
};

/// Nodes are the roots of H_order, obtained from the symmetric tridiagonal
/// Jacobi matrix and polished with Newton steps on the normalized recurrence;
/// weights come from w_i = 1 / (order * h_{order-1}(x_i)^2).
QuadratureRule gauss_hermite_rule(int order);

/// |sum_{n<=n_trunc} H_n(x) t^n / n! - exp(2tx - t^2)|.
double check_generating_function(double x, double t, int n_trunc);

/// |H_n(x+y) - sum_k C(n,k) (2y)^(n-k) H_k(x)| relative to max(1, |H_n(x+y)|).
double check_binomial_identity(int n, double x, double y);

/// Deviation of the quadrature evaluation of
/// (-2i)^n e^(x^2) pi^(-1/2) Integral xi^n e^(2 i x xi) e^(-xi^2) dxi
/// from H_n(x), relative to max(1, |H_n(x)|).  The imaginary part of the
/// quadrature must vanish to rounding and is folded into the residual.
double check_integral_representation(int n, double x, const QuadratureRule& rule);

/// Residual of d^N/dt^N e^(-(x-t)^2 + x^2) = e^(-(x-t)^2 + x^2) H_N(x - t),
/// with the left side approximated by Richardson-extrapolated central
/// differences; relative to max(1, |rhs|).
double check_generating_derivative(int N, double x, double t);

/// Exact integer coefficients of H_n from the recurrence.
std::vector<Int> hermite_coefficients(int n);

/// Exact integer coefficients of H_n from (-1)^n e^(x^2) d^n/dx^n e^(-x^2),
/// computed symbolically; an independent route used to cross-check the
/// recurrence coefficients.
std::vector<Int> hermite_coefficients_rodrigues(int n);

}  // namespace ouk
