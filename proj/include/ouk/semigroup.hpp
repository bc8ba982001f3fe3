#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "ouk/hermite.hpp"
#include "ouk/multi_index.hpp"

namespace ouk {

/// A function of a d-vector sampled pointwise under the integral.  Quadrature
/// against the kernel is valid for integrands of at most polynomial growth,
/// and is exact (up to rounding) when the function is a polynomial within the
/// rule's degree of exactness.
struct SampledFunction {
  std::function<double(const Eigen::VectorXd&)> evaluator;
  int dim = 1;
  std::string growth_note =
      "assumed to grow at most polynomially; quadrature is exact for "
      "polynomials within the rule's degree";
};

/// L^N e^{tL} u at the point x:  integral of M_t^N(x, y) u(y) dgamma(y),
/// by tensor Gauss-Hermite quadrature.  The kernel's exp(|y|^2) factor cancels
/// the Gaussian of dgamma analytically: the product M_t^N(x, y) dgamma(y) is a
/// Gaussian centered at e^{-t} x with width sqrt(1 - e^{-2t}) times the
/// polynomial bracket, so the quadrature runs on shifted, scaled nodes and
/// stays exact for polynomial u.
double apply_semigroup_derivative(const SampledFunction& u, double t, int order,
                                  const Eigen::VectorXd& x, const QuadratureRule& rule);

/// Max residual over x_points of applying L^N e^{tL} to h_alpha against the
/// eigenvalue prediction (-|alpha|)^N e^{-t|alpha|} h_alpha(x), relative to
/// max(1, |h_alpha(x)|).
double eigenfunction_check(const MultiIndex& alpha, double t, int order,
                           const std::vector<Eigen::VectorXd>& x_points,
                           const QuadratureRule& rule);

/// Relative deviation between |alpha|^N e^{-t|alpha|} prod_i h_{alpha_i}(x_i)
/// and its multinomial expansion
/// sum_{|n|=N} multinomial(N; n) prod_i alpha_i^{n_i} e^{-t alpha_i}
/// h_{alpha_i}(x_i); a floating-point identity, expected < 1e-12.
double multinomial_reduction_check(const MultiIndex& alpha, double t, int order,
                                   const Eigen::VectorXd& x);

/// integral of M_s^N(x, z) M_t^M(z, y) dgamma(z) in one dimension, evaluated
/// by quadrature after merging the two Gaussian factors analytically; the
/// remaining integrand is the product of the two polynomial brackets, so the
/// rule is exact for 2(N + M) < 2 * order.  Semigroup composition makes this
/// equal to M_{s+t}^{N+M}(x, y).
double compose_kernels(double s, int order_s, double t, int order_t, double x, double y,
                       const QuadratureRule& rule);

}  // namespace ouk
