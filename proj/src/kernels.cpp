#include "ouk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ouk/combinatorics.hpp"
#include "ouk/finite_difference.hpp"
#include "ouk/hermite.hpp"

namespace ouk {

namespace {

constexpr double kMinTime = 1e-6;
constexpr int kMaxCachedOrder = 40;

const std::vector<std::vector<double>>& stirling_rows() {
  static const std::vector<std::vector<double>> rows = [] {
    std::vector<std::vector<double>> r(kMaxCachedOrder + 1);
    for (int n = 0; n <= kMaxCachedOrder; ++n) {
      r[n].resize(n + 1);
      for (int m = 0; m <= n; ++m) r[n][m] = to_double(stirling2(n, m));
    }
    return r;
  }();
  return rows;
}

const std::vector<std::vector<double>>& binomial_rows() {
  static const std::vector<std::vector<double>> rows = [] {
    std::vector<std::vector<double>> r(2 * kMaxCachedOrder + 1);
    for (int n = 0; n <= 2 * kMaxCachedOrder; ++n) {
      r[n].resize(n + 1);
      for (int k = 0; k <= n; ++k) r[n][k] = to_double(binomial(n, k));
    }
    return r;
  }();
  return rows;
}

void require_time(double t) {
  if (!(t >= kMinTime))
    throw std::domain_error("kernel evaluation requires t >= 1e-6 (kernels are singular at t = 0)");
}

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  if (order > kMaxCachedOrder)
    throw std::invalid_argument("derivative order beyond supported range");
}

// Shared per-time quantities of the closed form.
struct TimeFactors {
  double a2;      // 1 - e^{-2t}, via expm1 for small t
  double sqrt_a2;
  double emt;     // e^{-t}
  double sigma;   // e^{-t} / sqrt(1 - e^{-2t})
};

TimeFactors time_factors(double t) {
  TimeFactors f;
  f.a2 = -std::expm1(-2.0 * t);
  f.sqrt_a2 = std::sqrt(f.a2);
  f.emt = std::exp(-t);
  f.sigma = f.emt / f.sqrt_a2;
  return f;
}

double bracket_1d(const TimeFactors& f, int order, double x, double beta) {
  const auto& s_row = stirling_rows()[order];
  const auto& binom = binomial_rows();
  const auto hx = hermite_sequence(order, x);
  const auto hb = hermite_sequence(2 * order, beta);
  double sum = 0.0;
  double half_pow = 1.0;  // 2^{-m}
  for (int m = 0; m <= order; ++m) {
    if (m > 0) half_pow *= 0.5;
    const double sign = ((order + m) % 2 == 0) ? 1.0 : -1.0;
    const double outer = sign * s_row[m] * half_pow;
    if (outer == 0.0) continue;
    for (int l = 0; l <= m; ++l) {
      sum += outer * binom[m][l] * std::pow(f.sigma, 2 * m - l) * hx[l] * hb[2 * m - l];
    }
  }
  return sum;
}

double bracket_1d_dx(const TimeFactors& f, int order, double x, double beta) {
  const auto& s_row = stirling_rows()[order];
  const auto& binom = binomial_rows();
  const auto hx = hermite_sequence(order, x);
  const auto hb = hermite_sequence(2 * order, beta);
  double sum = 0.0;
  double half_pow = 1.0;
  for (int m = 0; m <= order; ++m) {
    if (m > 0) half_pow *= 0.5;
    const double sign = ((order + m) % 2 == 0) ? 1.0 : -1.0;
    const double outer = sign * s_row[m] * half_pow;
    if (outer == 0.0) continue;
    for (int l = 0; l <= m; ++l) {
      const double c = outer * binom[m][l] * std::pow(f.sigma, 2 * m - l);
      double term = 0.0;
      if (l >= 1) term += 2.0 * l * hx[l - 1] * hb[2 * m - l];
      if (2 * m - l >= 1) term += f.sigma * hx[l] * 2.0 * (2 * m - l) * hb[2 * m - l - 1];
      sum += c * term;
    }
  }
  return sum;
}

struct Assembled {
  double log_gaussian;
  std::vector<double> beta;                   // per coordinate
  std::vector<std::vector<double>> bracket;   // [coordinate][order]
};

Assembled assemble(const KernelQuery& q, bool with_brackets) {
  const TimeFactors f = time_factors(q.t);
  const int d = q.dim();
  Assembled a;
  a.log_gaussian = -0.5 * d * std::log(f.a2);
  a.beta.resize(d);
  for (int i = 0; i < d; ++i) {
    const double beta = (q.x[i] * f.emt - q.y[i]) / f.sqrt_a2;
    a.beta[i] = beta;
    a.log_gaussian += -beta * beta + q.y[i] * q.y[i];
  }
  if (with_brackets) {
    a.bracket.resize(d);
    for (int i = 0; i < d; ++i) {
      a.bracket[i].resize(q.order + 1);
      for (int n = 0; n <= q.order; ++n)
        a.bracket[i][n] = bracket_1d(f, n, q.x[i], a.beta[i]);
    }
  }
  return a;
}

double composition_sum(const KernelQuery& q, const Assembled& a) {
  double sum = 0.0;
  for (const MultiIndex& n : compositions(q.order, q.dim())) {
    double prod = to_double(multinomial(q.order, n));
    for (int i = 0; i < q.dim(); ++i) prod *= a.bracket[i][n[i]];
    sum += prod;
  }
  return sum;
}

// Neumaier-compensated accumulator.
struct Compensated {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

void KernelQuery::validate() const {
  require_time(t);
  require_order(order);
  if (x.size() != y.size() || x.size() == 0)
    throw std::invalid_argument("KernelQuery: x and y must be non-empty with equal length");
}

double log_mehler_kernel(double t, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  require_time(t);
  if (x.size() != y.size() || x.size() == 0)
    throw std::invalid_argument("mehler kernel: x and y must be non-empty with equal length");
  KernelQuery q{t, 0, x, y};
  return assemble(q, false).log_gaussian;
}

double mehler_kernel(double t, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return std::exp(log_mehler_kernel(t, x, y));
}

double mehler_kernel(const KernelQuery& q) {
  q.validate();
  if (q.order != 0) throw std::invalid_argument("mehler_kernel: query must have order 0");
  return mehler_kernel(q.t, q.x, q.y);
}

int default_spectral_truncation(double t, int order) {
  require_time(t);
  require_order(order);
  // Leading magnitude of k^order e^{-tk} sits near k = order / t (k = 0 for
  // order 0, where the term is 1).
  const double kstar = order / t;
  double log_peak;
  if (order == 0) {
    log_peak = 0.0;
  } else {
    log_peak = -std::numeric_limits<double>::infinity();
    for (int k = std::max(1, static_cast<int>(kstar) - 1);
         k <= std::max(1, static_cast<int>(kstar) + 1); ++k)
      log_peak = std::max(log_peak, order * std::log(double(k)) - t * k);
  }
  const double target = log_peak + std::log(1e-16);
  int k = std::max(order + 5, static_cast<int>(kstar) + 1);
  constexpr int kCap = 20000;
  while (k < kCap) {
    double log_term = (order > 0 ? order * std::log(double(k)) : 0.0) - t * k;
    if (log_term < target) break;
    ++k;
  }
  return k;
}

SpectralProfile::SpectralProfile(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int trunc) {
  if (x.size() != y.size() || x.size() == 0)
    throw std::invalid_argument("SpectralProfile: x and y must be non-empty with equal length");
  if (trunc < 0) throw std::invalid_argument("SpectralProfile: trunc must be >= 0");
  const int K = trunc;
  const int d = static_cast<int>(x.size());
  profile_.assign(K + 1, 0.0);
  profile_abs_.assign(K + 1, 0.0);
  {
    const auto hx = hermite_normalized_sequence(K, x[0]);
    const auto hy = hermite_normalized_sequence(K, y[0]);
    for (int k = 0; k <= K; ++k) {
      profile_[k] = hx[k] * hy[k];
      profile_abs_[k] = std::abs(profile_[k]);
    }
  }
  for (int i = 1; i < d; ++i) {
    const auto hx = hermite_normalized_sequence(K, x[i]);
    const auto hy = hermite_normalized_sequence(K, y[i]);
    std::vector<double> next(K + 1, 0.0), next_abs(K + 1, 0.0);
    for (int k = 0; k <= K; ++k) {
      const double v = hx[k] * hy[k];
      const double va = std::abs(v);
      if (va == 0.0) continue;
      for (int j = 0; j + k <= K; ++j) {
        next[j + k] += profile_[j] * v;
        next_abs[j + k] += profile_abs_[j] * va;
      }
    }
    profile_ = std::move(next);
    profile_abs_ = std::move(next_abs);
  }
}

SpectralEval SpectralProfile::eval(double t, int order) const {
  require_time(t);
  require_order(order);
  const int K = trunc();
  Compensated value, scale;
  for (int k = 0; k <= K; ++k) {
    double w;
    if (order == 0) w = std::exp(-t * k);
    else if (k == 0) w = 0.0;
    else {
      w = std::pow(double(k), order) * std::exp(-t * k);
      if (order % 2 == 1) w = -w;
    }
    value.add(w * profile_[k]);
    scale.add(std::abs(w) * profile_abs_[k]);
  }
  return {value.value(), scale.value(), K};
}

SpectralEval derivative_kernel_spectral_detail(const KernelQuery& q, const OracleControls& c) {
  q.validate();
  int K = c.trunc > 0 ? c.trunc : default_spectral_truncation(q.t, q.order);
  K = std::max(K, q.order + 5);
  return SpectralProfile(q.x, q.y, K).eval(q.t, q.order);
}

double derivative_kernel_spectral(const KernelQuery& q, const OracleControls& c) {
  return derivative_kernel_spectral_detail(q, c).value;
}

double mehler_spectral(const KernelQuery& q, const OracleControls& c) {
  if (q.order != 0) throw std::invalid_argument("mehler_spectral: query must have order 0");
  return derivative_kernel_spectral(q, c);
}

double derivative_kernel_fd(const KernelQuery& q, const OracleControls& c) {
  q.validate();
  if (q.order > 4)
    throw std::invalid_argument("derivative_kernel_fd: order must be <= 4");
  if (q.order == 0) return mehler_kernel(q.t, q.x, q.y);
  // Balances stencil truncation (grows with step) against subtractive
  // rounding (grows as step shrinks); the kernel varies on the scale t/N.
  double step = c.fd_step > 0 ? c.fd_step : 0.15 * q.t / (q.order + 1.0);
  if (!(q.t > q.order * step))
    throw std::domain_error("derivative_kernel_fd: stencil would leave t > 0");
  auto f = [&](double s) { return mehler_kernel(s, q.x, q.y); };
  return central_derivative(f, q.t, q.order, step, c.fd_richardson_levels);
}

double kernel_bracket_1d(double t, int order, double x, double y) {
  require_time(t);
  require_order(order);
  const TimeFactors f = time_factors(t);
  return bracket_1d(f, order, x, (x * f.emt - y) / f.sqrt_a2);
}

double kernel_bracket_1d_dx(double t, int order, double x, double y) {
  require_time(t);
  require_order(order);
  const TimeFactors f = time_factors(t);
  return bracket_1d_dx(f, order, x, (x * f.emt - y) / f.sqrt_a2);
}

double derivative_kernel_1d(double t, int order, double x, double y) {
  KernelQuery q{t, order, Eigen::VectorXd::Constant(1, x), Eigen::VectorXd::Constant(1, y)};
  return derivative_kernel(q);
}

double derivative_kernel(const KernelQuery& q) {
  q.validate();
  const Assembled a = assemble(q, true);
  return std::exp(a.log_gaussian) * composition_sum(q, a);
}

double derivative_kernel_factored(const KernelQuery& q) {
  q.validate();
  const TimeFactors f = time_factors(q.t);
  const int d = q.dim();
  std::vector<std::vector<double>> one_dim(d);
  for (int i = 0; i < d; ++i) {
    const double beta = (q.x[i] * f.emt - q.y[i]) / f.sqrt_a2;
    const double m1 = std::exp(-beta * beta + q.y[i] * q.y[i]) / f.sqrt_a2;
    one_dim[i].resize(q.order + 1);
    for (int n = 0; n <= q.order; ++n) one_dim[i][n] = m1 * bracket_1d(f, n, q.x[i], beta);
  }
  double sum = 0.0;
  for (const MultiIndex& n : compositions(q.order, d)) {
    double prod = to_double(multinomial(q.order, n));
    for (int i = 0; i < d; ++i) prod *= one_dim[i][n[i]];
    sum += prod;
  }
  return sum;
}

SplitKernel derivative_kernel_split(const KernelQuery& q) {
  q.validate();
  const Assembled a = assemble(q, true);
  return {a.log_gaussian, composition_sum(q, a)};
}

SplitKernel derivative_kernel_dx_split(const KernelQuery& q, int deriv_coordinate) {
  q.validate();
  if (deriv_coordinate < 1 || deriv_coordinate > q.dim())
    throw std::invalid_argument("deriv_coordinate must be in 1..dim");
  const int j = deriv_coordinate - 1;
  const TimeFactors f = time_factors(q.t);
  const Assembled a = assemble(q, true);

  // d/dx_j [e^{log_gaussian} S] = e^{log_gaussian} (-2 sigma beta_j S + dS/dx_j).
  double s = 0.0, ds = 0.0;
  for (const MultiIndex& n : compositions(q.order, q.dim())) {
    double rest = to_double(multinomial(q.order, n));
    for (int i = 0; i < q.dim(); ++i)
      if (i != j) rest *= a.bracket[i][n[i]];
    s += rest * a.bracket[j][n[j]];
    ds += rest * bracket_1d_dx(f, n[j], q.x[j], a.beta[j]);
  }
  return {a.log_gaussian, -2.0 * f.sigma * a.beta[j] * s + ds};
}

double kernel_K(double t, int order, double alpha, const Eigen::VectorXd& x,
                const Eigen::VectorXd& y) {
  if (!(t > 0)) throw std::domain_error("kernel_K: t must be > 0");
  if (!(alpha > 1)) throw std::domain_error("kernel_K: alpha must be > 1");
  KernelQuery q{t * t / alpha, order, x, y};
  return std::pow(t, 2 * order) * derivative_kernel(q);
}

double kernel_K_tilde(double t, int order, double alpha, int deriv_coordinate,
                      const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (!(t > 0)) throw std::domain_error("kernel_K_tilde: t must be > 0");
  if (!(alpha > 1)) throw std::domain_error("kernel_K_tilde: alpha must be > 1");
  KernelQuery q{t * t / alpha, order, x, y};
  SplitKernel g = derivative_kernel_dx_split(q, deriv_coordinate);
  return std::pow(t, 2 * order + 1) * std::exp(g.log_gaussian) * g.polynomial;
}

double relative_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double relative_deviation_scaled(double a, double b, double scale) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b), scale});
}

}  // namespace ouk
