#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ouk {

/// Inclusive uniform grid; count == 1 collapses to {lo}.
struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  double at(int i) const {
    return count == 1 ? lo : lo + (hi - lo) * (static_cast<double>(i) / (count - 1));
  }
};

/// Parameters of one sup-ratio sweep for the scaled-kernel estimates.
struct BoundSweepSpec {
  int order = 1;            // N
  double alpha = 64.0;      // scale separation, > 1 and large (see gate below)
  double C = 1.0;           // sweep restricted to t |x| <= C
  double T = 1.0;           // times range in (0, T)
  GridRange t_grid{0.05, 0.95, 31};
  GridRange x_grid{-3.0, 3.0, 61};
  GridRange y_grid{-3.0, 3.0, 61};
  int dim = 1;
  int deriv_coordinate = 1;  // j, for the gradient kernel; 1-based
  /// Empirically exhibited comparison constant: a point passes when
  /// |kernel| <= ratio_cap * alpha * exp(alpha C^2 / 2) * M_{t^2}(x,y)
  ///             * exp(-(alpha / (8 e^{2T})) |e^{-t^2} x - y|^2 / (1 - e^{-2t^2})).
  double ratio_cap = 1.0;
};

struct BoundReport {
  double max_ratio = 0.0;
  double argmax_t = 0.0;
  Eigen::VectorXd argmax_x;
  Eigen::VectorXd argmax_y;
  long long samples = 0;    // grid points satisfying t |x| <= C
  long long violations = 0; // non-finite ratios or ratios above ratio_cap
};

enum class SweepKernel { K, KTilde };

/// The sweep's hypotheses require alpha large enough that
///   1 - alpha / (4 e^{2T}) <= -alpha / (8 e^{2T})   (i.e. alpha >= 8 e^{2T})
/// and 1 - e^{-2 t^2 / alpha} >= t^2 / alpha on the whole grid; specs outside
/// this regime are rejected with this error rather than swept silently.
struct OutOfHypothesisError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The constraint t |x| <= C excluded every grid point.
struct EmptyGridError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Slack pair of the two comparison inequalities relating the kernel at time
/// t/alpha to the kernel at time t.  slack1 is LHS - RHS of
///
///   |e^{-t/a} x - y|^2 / (1 - e^{-2t/a})
///     >= (a/2) e^{-2t} |e^{-t} x - y|^2 / (1 - e^{-2t})
///        - t^2 min(|x|^2, |y|^2) / (1 - e^{-2t/a}),
///
/// slack2 is the smaller gap in
/// a e^{-2t} <= (1 - e^{-2t}) / (1 - e^{-2t/a}) <= a.  Both are non-negative
/// up to rounding.
std::pair<double, double> lemma62_check(double alpha, double t, const Eigen::VectorXd& x,
                                        const Eigen::VectorXd& y);

/// Sup-ratio sweep over the grid for the kernel K (or its first-coordinate
/// derivative form Ktilde).  Ratios are formed in log space so that Gaussian
/// factors that underflow on their own cancel correctly.
BoundReport theorem63_sweep(const BoundSweepSpec& spec, SweepKernel which);

struct CalderonResult {
  double integral_value = 0.0;  // I, averaged over the requested eigenvalues
  double constant = 0.0;        // C = 1 / I
  double max_deviation = 0.0;   // max_n |I(n) - I(n_1)|
  double closed_form = 0.0;     // alpha^{N+1} N! / 2
};

/// Evaluates I(n) = integral_0^inf (t^2 n)^{N+1} e^{-t^2 n / alpha} dt/t for
/// each Hermite eigenvalue n by trapezoid quadrature after the substitution
/// t = e^u (which tames both endpoints); I is independent of n and equals
/// alpha^{N+1} N! / 2, and the reproducing constant is C = 1 / I.
CalderonResult calderon_constant(int order, double alpha, const std::vector<int>& eigenvalues,
                                 int quad_points = 2000);

}  // namespace ouk
