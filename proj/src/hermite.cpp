#include "ouk/hermite.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>

#include "ouk/finite_difference.hpp"

namespace ouk {

double hermite_multi(const MultiIndex& alpha, const Eigen::VectorXd& x, bool normalized) {
  if (alpha.dim() != x.size())
    throw std::invalid_argument("hermite_multi: dimension mismatch between alpha and x");
  double prod = 1.0;
  for (int i = 0; i < alpha.dim(); ++i)
    prod *= normalized ? hermite_normalized(alpha[i], x[i]) : hermite(alpha[i], x[i]);
  return prod;
}

QuadratureRule gauss_hermite_rule(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite_rule: order must be >= 1");

  // Jacobi matrix for the monic recurrence p_{k+1} = x p_k - (k/2) p_{k-1}.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    double b = std::sqrt(0.5 * k);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  Eigen::VectorXd nodes = solver.eigenvalues();
  std::sort(nodes.data(), nodes.data() + order);

  // Newton polish on h_order (h_n' = sqrt(2n) h_{n-1}).
  for (int i = 0; i < order; ++i) {
    for (int it = 0; it < 2; ++it) {
      double v = hermite_normalized(order, nodes[i]);
      double dv = std::sqrt(2.0 * order) * hermite_normalized(order - 1, nodes[i]);
      if (dv != 0.0) nodes[i] -= v / dv;
    }
  }
  // Enforce exact symmetry about 0.
  for (int i = 0; i < order / 2; ++i) {
    double m = 0.5 * (nodes[order - 1 - i] - nodes[i]);
    nodes[i] = -m;
    nodes[order - 1 - i] = m;
  }
  if (order % 2 == 1) nodes[order / 2] = 0.0;

  Eigen::VectorXd weights(order);
  for (int i = 0; i < order; ++i) {
    double h = hermite_normalized(order - 1, nodes[i]);
    weights[i] = 1.0 / (order * h * h);
  }
  return {std::move(nodes), std::move(weights)};
}

double check_generating_function(double x, double t, int n_trunc) {
  if (n_trunc < 1) throw std::invalid_argument("check_generating_function: n_trunc must be >= 1");
  // H_n(x) t^n / n! = h_n(x) (t sqrt(2))^n / sqrt(n!), accumulated without
  // forming H_n or n! separately.
  double sum = 0.0;
  double factor = 1.0;  // (t sqrt(2))^n / sqrt(n!)
  const double ts = t * std::sqrt(2.0);
  double h0 = 1.0, h1 = std::sqrt(2.0) * x;
  for (int n = 0; n <= n_trunc; ++n) {
    double hn;
    if (n == 0) hn = h0;
    else if (n == 1) hn = h1;
    else {
      hn = x * std::sqrt(2.0 / n) * h1 - std::sqrt((n - 1.0) / n) * h0;
      h0 = h1;
      h1 = hn;
    }
    sum += hn * factor;
    factor *= ts / std::sqrt(n + 1.0);
  }
  return std::abs(sum - std::exp(2.0 * t * x - t * t));
}

double check_binomial_identity(int n, double x, double y) {
  if (n < 0) throw std::invalid_argument("check_binomial_identity: n must be >= 0");
  const auto h = hermite_sequence(n, x);
  double rhs = 0.0;
  for (int k = 0; k <= n; ++k)
    rhs += to_double(binomial(n, k)) * std::pow(2.0 * y, n - k) * h[k];
  double lhs = hermite(n, x + y);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double check_integral_representation(int n, double x, const QuadratureRule& rule) {
  if (n < 0) throw std::invalid_argument("check_integral_representation: n must be >= 0");
  if (rule.order() < n + 5)
    throw std::invalid_argument("check_integral_representation: rule order must be >= n + 5");
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < rule.order(); ++i) {
    double xi = rule.nodes[i];
    acc += rule.weights[i] * std::pow(xi, n) *
           std::exp(std::complex<double>(0.0, 2.0 * x * xi));
  }
  // (-2i)^n e^(x^2) times the gamma-normalized integral.
  acc *= std::pow(std::complex<double>(0.0, -2.0), n) * std::exp(x * x);
  double expected = hermite(n, x);
  double err = std::abs(acc.real() - expected) + std::abs(acc.imag());
  return err / std::max(1.0, std::abs(expected));
}

double check_generating_derivative(int N, double x, double t) {
  if (N < 1 || N > 4)
    throw std::invalid_argument("check_generating_derivative: N must be in 1..4");
  auto g = [x](double s) { return std::exp(-(x - s) * (x - s) + x * x); };
  double fd = central_derivative(g, t, N, 1e-2, 3);
  double rhs = g(t) * hermite(N, x - t);
  return std::abs(fd - rhs) / std::max(1.0, std::abs(rhs));
}

std::vector<Int> hermite_coefficients(int n) {
  if (n < 0) throw std::invalid_argument("hermite_coefficients: n must be >= 0");
  std::vector<std::vector<Int>> h(n + 1);
  h[0] = {Int(1)};
  if (n >= 1) h[1] = {Int(0), Int(2)};
  for (int k = 1; k < n; ++k) {
    std::vector<Int> next(k + 2, Int(0));
    for (int j = 0; j <= k; ++j) next[j + 1] += 2 * h[k][j];
    for (int j = 0; j < k; ++j) next[j] -= 2 * k * h[k - 1][j];
    h[k + 1] = std::move(next);
  }
  return h[n];
}

std::vector<Int> hermite_coefficients_rodrigues(int n) {
  if (n < 0) throw std::invalid_argument("hermite_coefficients_rodrigues: n must be >= 0");
  // d^n/dx^n e^(-x^2) = q_n(x) e^(-x^2) with q_{k+1} = q_k' - 2x q_k.
  std::vector<Int> q = {Int(1)};
  for (int k = 0; k < n; ++k) {
    std::vector<Int> next(q.size() + 1, Int(0));
    for (int j = 1; j < static_cast<int>(q.size()); ++j) next[j - 1] += j * q[j];
    for (int j = 0; j < static_cast<int>(q.size()); ++j) next[j + 1] -= 2 * q[j];
    q = std::move(next);
  }
  if (n % 2 == 1)
    for (auto& c : q) c = -c;
  return q;
}

}  // namespace ouk
