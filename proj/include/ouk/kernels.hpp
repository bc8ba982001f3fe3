#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ouk/multi_index.hpp"

namespace ouk {

/// One kernel evaluation request: the kernel of L^N e^{tL} with respect to
/// the Gaussian probability measure, at the point (x, y) in d dimensions.
/// The kernels are singular as t -> 0, so t must be strictly positive;
/// below ~1e-6 the closed form is ill-conditioned and queries are rejected.
struct KernelQuery {
  double t = 1.0;
  int order = 0;  // N, the number of time derivatives
  Eigen::VectorXd x;
  Eigen::VectorXd y;

  int dim() const { return static_cast<int>(x.size()); }
  void validate() const;
};

/// Tuning knobs for the two independent oracles.
struct OracleControls {
  /// Max total Hermite degree in the spectral series; 0 selects the a-priori
  /// truncation for which the dropped tail is below 1e-16 of the leading term.
  int trunc = 0;
  /// Base step of the central difference in t; 0 selects 0.15 t / (order + 1).
  double fd_step = 0.0;
  int fd_richardson_levels = 3;
};

/// Mehler kernel
///   M_t(x, y) = (1 - e^{-2t})^{-d/2} exp(-|e^{-t} x - y|^2 / (1 - e^{-2t}))
///               * exp(|y|^2).
double mehler_kernel(double t, const Eigen::VectorXd& x, const Eigen::VectorXd& y);
double mehler_kernel(const KernelQuery& q);  // requires q.order == 0
double log_mehler_kernel(double t, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Spectral form sum_alpha e^{-t|alpha|} h_alpha(x) h_alpha(y); requires
/// q.order == 0.
double mehler_spectral(const KernelQuery& q, const OracleControls& c = {});

/// Spectral evaluation of the derivative kernel,
///   sum_alpha (-|alpha|)^N e^{-t|alpha|} h_alpha(x) h_alpha(y),
/// the ground-truth oracle (L^N e^{tL} scales each eigenfunction by
/// (-|alpha|)^N e^{-t|alpha|}).  term_scale is the sum of magnitudes of the
/// accumulated terms: the natural conditioning scale of the expansion, which
/// bounds the absolute accuracy any comparison against this oracle can claim.
struct SpectralEval {
  double value = 0.0;
  double term_scale = 0.0;
  int trunc = 0;
};
SpectralEval derivative_kernel_spectral_detail(const KernelQuery& q, const OracleControls& c = {});
double derivative_kernel_spectral(const KernelQuery& q, const OracleControls& c = {});

/// Degree-weight profile of a fixed pair (x, y):
///   P_k = sum_{|alpha| = k} h_alpha(x) h_alpha(y),
/// computed as the d-fold convolution of the per-coordinate sequences
/// h_k(x_i) h_k(y_i).  Once built it prices any (t, order) as the dot product
/// sum_k (-k)^order e^{-tk} P_k, so grid comparisons reuse one profile for
/// many evaluations.
class SpectralProfile {
 public:
  SpectralProfile(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int trunc);
  SpectralEval eval(double t, int order) const;
  int trunc() const { return static_cast<int>(profile_.size()) - 1; }

 private:
  std::vector<double> profile_;
  std::vector<double> profile_abs_;  // degreewise magnitude flow, for term_scale
};

/// A-priori truncation K with K^order e^{-tK} below 1e-16 of the series'
/// leading magnitude.
int default_spectral_truncation(double t, int order);

/// Second oracle: Richardson-extrapolated central difference in t of the
/// Mehler kernel.  Limited to order <= 4; the stencil must stay in t > 0.
double derivative_kernel_fd(const KernelQuery& q, const OracleControls& c = {});

/// Closed form in one dimension:
///
///   M_t^N(x, y) = M_t(x, y) * sum_{m=0}^{N} sum_{l=0}^{m} (-1)^{N+m}
///                 S(N, m) C(m, l) 2^{-m} sigma^{2m-l}
///                 H_l(x) H_{2m-l}(beta_t(x, y))
///
/// with sigma = e^{-t} / sqrt(1 - e^{-2t}) and
/// beta_t(x, y) = (x e^{-t} - y) / sqrt(1 - e^{-2t}).  The sign convention
/// (the factor (-1)^{N+m} with sigma > 0) and the argument x of H_l are
/// pinned by the analytic time derivative at N = 1 and by the spectral
/// series; see docs/derivative-kernel.md for the derivation.
double derivative_kernel_1d(double t, int order, double x, double y);

/// The bracket multiplying M_t(x, y) in the 1-d closed form, and its
/// x-derivative (H_k' = 2k H_{k-1}, d beta/dx = sigma).
double kernel_bracket_1d(double t, int order, double x, double y);
double kernel_bracket_1d_dx(double t, int order, double x, double y);

/// Closed form in d dimensions: the d-dimensional Mehler factor times
/// sum over compositions |n| = N of multinomial(N; n) prod_i bracket_{n_i}.
/// The 1-d bracket values are cached per (coordinate, order) pair.
double derivative_kernel(const KernelQuery& q);

/// Same kernel assembled the other way, as
/// sum_{|n|=N} multinomial(N; n) prod_i M_t^{n_i}(x_i, y_i) where every 1-d
/// factor carries its own Mehler factor; agrees with derivative_kernel to
/// ~1e-12 relative and exists to cross-check the assembly.
double derivative_kernel_factored(const KernelQuery& q);

/// Kernel split as value = exp(log_gaussian) * polynomial, for consumers that
/// need ratios of kernels whose Gaussian factors underflow on their own.
struct SplitKernel {
  double log_gaussian = 0.0;
  double polynomial = 0.0;
};
SplitKernel derivative_kernel_split(const KernelQuery& q);

/// Split form of d/dx_j of the derivative kernel (analytic product rule);
/// deriv_coordinate is 1-based.
SplitKernel derivative_kernel_dx_split(const KernelQuery& q, int deriv_coordinate);

/// K_{t^2, N, alpha}(x, y) = t^{2N} M^N_{t^2/alpha}(x, y), the kernel of
/// (t^2 L)^N e^{(t^2/alpha) L}.  Requires t > 0 and alpha > 1.
double kernel_K(double t, int order, double alpha, const Eigen::VectorXd& x,
                const Eigen::VectorXd& y);

/// Ktilde_{t^2, N, alpha, j}(x, y) = t d/dx_j K_{t^2, N, alpha}(x, y),
/// computed analytically; deriv_coordinate is 1-based.
double kernel_K_tilde(double t, int order, double alpha, int deriv_coordinate,
                      const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// |a - b| / max(1, |a|, |b|): relative for large values, absolute near zero.
double relative_deviation(double a, double b);

/// Deviation relative to max(1, |a|, |b|, scale); used when comparing against
/// a series whose own conditioning scale is `scale`.
double relative_deviation_scaled(double a, double b, double scale);

}  // namespace ouk
