#include <doctest.h>

#include <cmath>
#include <random>

#include "ouk/checks.hpp"
#include "ouk/kernels.hpp"
#include "ouk/semigroup.hpp"

using namespace ouk;

namespace {

Eigen::VectorXd vec1(double x) { return Eigen::VectorXd::Constant(1, x); }

Eigen::VectorXd vec(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

// d/dt of the Mehler kernel at x = y = 0 in one dimension.
double mehler_time_derivative_origin(double t) {
  double a2 = -std::expm1(-2.0 * t);
  return -std::exp(-2.0 * t) * std::pow(a2, -1.5);
}

}  // namespace

TEST_CASE("mehler kernel closed form") {
  CHECK(mehler_kernel(1.0, vec1(0.0), vec1(0.0)) ==
        doctest::Approx(1.0 / std::sqrt(-std::expm1(-2.0))).epsilon(1e-15));

  KernelQuery q{0.5, 0, vec({1.0, 0.0}), vec({0.0, 1.0})};
  OracleControls c;
  c.trunc = 200;
  CHECK(relative_deviation(mehler_kernel(q), mehler_spectral(q, c)) < 1e-10);

  KernelQuery q2{3.0, 0, vec1(2.0), vec1(-1.0)};
  CHECK(relative_deviation(mehler_kernel(q2), mehler_spectral(q2, c)) < 1e-10);

  CHECK_THROWS_AS(mehler_kernel(0.0, vec1(0.0), vec1(0.0)), std::domain_error);
  CHECK_THROWS_AS(mehler_kernel(-1.0, vec1(0.0), vec1(0.0)), std::domain_error);
  CHECK_THROWS_AS(mehler_kernel(KernelQuery{1.0, 2, vec1(0.0), vec1(0.0)}),
                  std::invalid_argument);
}

TEST_CASE("spectral series at large time collapses to the constant mode") {
  KernelQuery q{30.0, 0, vec1(0.0), vec1(0.0)};
  CHECK(mehler_spectral(q) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral series against the closed form") {
  OracleControls c;
  c.trunc = 200;
  KernelQuery q{1.0, 0, vec1(1.0), vec1(1.0)};
  CHECK(relative_deviation(mehler_spectral(q, c), mehler_kernel(q)) < 1e-10);

  OracleControls c2;
  c2.trunc = 120;
  KernelQuery q2{0.3, 0, vec({0.5, -0.5}), vec({1.0, 1.0})};
  CHECK(relative_deviation(mehler_spectral(q2, c2), mehler_kernel(q2)) < 1e-9);
}

TEST_CASE("derivative spectral oracle: order 0 and the analytic order 1 value") {
  KernelQuery q{1.0, 0, vec1(0.7), vec1(-0.2)};
  CHECK(derivative_kernel_spectral(q) == mehler_spectral(q));

  OracleControls c;
  c.trunc = 200;
  KernelQuery q1{1.0, 1, vec1(0.0), vec1(0.0)};
  CHECK(relative_deviation(derivative_kernel_spectral(q1, c),
                           mehler_time_derivative_origin(1.0)) < 1e-12);

  OracleControls c150;
  c150.trunc = 150;
  KernelQuery q2{0.8, 2, vec({1.0, 0.0}), vec({0.0, 1.0})};
  CHECK(relative_deviation(derivative_kernel_spectral(q2, c150),
                           derivative_kernel_fd(q2)) < 1e-6);
}

TEST_CASE("finite-difference oracle") {
  KernelQuery q0{0.9, 0, vec1(0.3), vec1(0.1)};
  CHECK(derivative_kernel_fd(q0) == mehler_kernel(0.9, q0.x, q0.y));

  KernelQuery q1{1.0, 1, vec1(0.0), vec1(0.0)};
  CHECK(relative_deviation(derivative_kernel_fd(q1), mehler_time_derivative_origin(1.0)) <
        1e-7);

  KernelQuery q3{1.5, 3, vec1(1.0), vec1(-0.5)};
  CHECK(relative_deviation(derivative_kernel_fd(q3), derivative_kernel_spectral(q3)) < 1e-5);

  KernelQuery q5{1.0, 5, vec1(0.0), vec1(0.0)};
  CHECK_THROWS_AS(derivative_kernel_fd(q5), std::invalid_argument);

  OracleControls wide;
  wide.fd_step = 0.2;
  KernelQuery qsmall{0.3, 4, vec1(0.0), vec1(0.0)};
  CHECK_THROWS_AS(derivative_kernel_fd(qsmall, wide), std::domain_error);
}

TEST_CASE("closed-form 1-d kernel") {
  // Order 0 collapses to the Mehler kernel exactly.
  for (double t : {0.2, 1.0, 2.5})
    for (double x : {-1.0, 0.4})
      CHECK(derivative_kernel_1d(t, 0, x, 0.3) == mehler_kernel(t, vec1(x), vec1(0.3)));

  CHECK(relative_deviation(derivative_kernel_1d(1.0, 1, 0.0, 0.0),
                           mehler_time_derivative_origin(1.0)) < 1e-14);

  OracleControls c;
  c.trunc = 300;
  KernelQuery q{0.7, 2, vec1(1.1), vec1(-0.4)};
  CHECK(relative_deviation(derivative_kernel_1d(0.7, 2, 1.1, -0.4),
                           derivative_kernel_spectral(q, c)) < 1e-9);

  CHECK_THROWS_AS(derivative_kernel_1d(0.0, 1, 0.0, 0.0), std::domain_error);
}

TEST_CASE("d-dimensional closed form") {
  // Trivial collapses.
  KernelQuery q0{0.6, 0, vec({0.3, -1.0, 2.0}), vec({0.1, 0.1, 0.1})};
  CHECK(derivative_kernel(q0) == mehler_kernel(0.6, q0.x, q0.y));

  for (int N = 0; N <= 4; ++N)
    CHECK(derivative_kernel(KernelQuery{0.8, N, vec1(0.9), vec1(-0.3)}) ==
          derivative_kernel_1d(0.8, N, 0.9, -0.3));

  OracleControls c;
  c.trunc = 120;
  KernelQuery q{1.0, 2, vec({1.0, 0.0, -1.0}), vec({0.5, 0.5, 0.5})};
  auto se = derivative_kernel_spectral_detail(q, c);
  CHECK(relative_deviation_scaled(derivative_kernel(q), se.value, 1e-3 * se.term_scale) <
        1e-8);

  KernelQuery bad{1.0, 1, vec({1.0, 2.0}), vec1(0.0)};
  CHECK_THROWS_AS(derivative_kernel(bad), std::invalid_argument);
}

TEST_CASE("both assemblies of the d-dimensional kernel agree") {
  for (double t : {0.15, 0.8})
    for (int N = 0; N <= 4; ++N) {
      KernelQuery q{t, N, vec({1.3, -2.0, 0.4}), vec({-0.6, 0.9, 2.2})};
      CHECK(relative_deviation(derivative_kernel(q), derivative_kernel_factored(q)) < 1e-12);
    }
}

TEST_CASE("kernel symmetry in x and y") {
  std::mt19937_64 rng(7);
  auto unit = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3);
    double t = 0.1 + 1.9 * unit();
    int N = static_cast<int>(rng() % 5);
    Eigen::VectorXd x(d), y(d);
    for (int i = 0; i < d; ++i) {
      x[i] = -3.0 + 6.0 * unit();
      y[i] = -3.0 + 6.0 * unit();
    }
    KernelQuery q{t, N, x, y}, qs{t, N, y, x};
    CHECK(relative_deviation(derivative_kernel(q), derivative_kernel(qs)) < 1e-9);
  }
}

TEST_CASE("oracle agreement on a randomized cloud") {
  std::mt19937_64 rng(11);
  auto unit = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  for (int trial = 0; trial < 60; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3);
    double t = 0.1 + 1.9 * unit();
    int N = static_cast<int>(rng() % 5);
    Eigen::VectorXd x(d), y(d);
    for (int i = 0; i < d; ++i) {
      x[i] = -3.0 + 6.0 * unit();
      y[i] = -3.0 + 6.0 * unit();
    }
    KernelQuery q{t, N, x, y};
    double closed = derivative_kernel(q);
    auto se = derivative_kernel_spectral_detail(q);
    CHECK(relative_deviation_scaled(closed, se.value, 1e-3 * se.term_scale) < 1e-9);
    CHECK(relative_deviation(closed, derivative_kernel_fd(q)) < 1e-5);
  }
}

TEST_CASE("semigroup composition of kernels") {
  auto rule = gauss_hermite_rule(64);
  for (double s : {0.2, 0.7})
    for (double t : {0.4, 1.3})
      for (int N = 0; N <= 3; ++N)
        for (int M = 0; N + M <= 3; ++M)
          for (double x : {-1.2, 0.5})
            for (double y : {-0.3, 1.8}) {
              double lhs = compose_kernels(s, N, t, M, x, y, rule);
              double rhs = derivative_kernel_1d(s + t, N + M, x, y);
              CHECK(relative_deviation(lhs, rhs) < 1e-7);
            }
}

TEST_CASE("scaled kernel K") {
  // Order 0: K is the Mehler kernel at the compressed time.
  CHECK(kernel_K(0.9, 0, 2.5, vec1(0.4), vec1(-0.2)) ==
        mehler_kernel(0.9 * 0.9 / 2.5, vec1(0.4), vec1(-0.2)));

  // Order 1 at the origin: t^2 times the analytic time derivative at t^2/alpha.
  CHECK(relative_deviation(kernel_K(1.0, 1, 2.0, vec1(0.0), vec1(0.0)),
                           mehler_time_derivative_origin(0.5)) < 1e-13);

  {
    double t = 0.6, alpha = 4.0;
    KernelQuery q{t * t / alpha, 2, vec({0.3, -0.8}), vec({1.1, 0.2})};
    auto se = derivative_kernel_spectral_detail(q);
    double expect = std::pow(t, 4) * se.value;
    CHECK(relative_deviation_scaled(kernel_K(t, 2, alpha, q.x, q.y), expect,
                                    1e-3 * std::pow(t, 4) * se.term_scale) < 1e-8);
  }

  CHECK_THROWS_AS(kernel_K(0.0, 1, 2.0, vec1(0.0), vec1(0.0)), std::domain_error);
  CHECK_THROWS_AS(kernel_K(1.0, 1, 1.0, vec1(0.0), vec1(0.0)), std::domain_error);
}

TEST_CASE("gradient kernel Ktilde") {
  // Odd symmetry at the origin.
  CHECK(kernel_K_tilde(1.0, 0, 2.0, 1, vec1(0.0), vec1(0.0)) == 0.0);

  auto fd_in_x = [](double t, int N, double alpha, int j, Eigen::VectorXd x,
                    const Eigen::VectorXd& y) {
    const double h = 1e-4;
    auto f = [&](double v) {
      Eigen::VectorXd xx = x;
      xx[j - 1] = v;
      return kernel_K(t, N, alpha, xx, y);
    };
    double x0 = x[j - 1];
    return t * (8.0 * (f(x0 + h) - f(x0 - h)) - (f(x0 + 2 * h) - f(x0 - 2 * h))) / (12.0 * h);
  };

  {
    double got = kernel_K_tilde(0.8, 1, 3.0, 1, vec1(1.0), vec1(0.5));
    CHECK(relative_deviation(got, fd_in_x(0.8, 1, 3.0, 1, vec1(1.0), vec1(0.5))) < 1e-6);
  }
  {
    Eigen::VectorXd x = vec({0.7, -1.1}), y = vec({0.2, 0.9});
    double got = kernel_K_tilde(0.7, 2, 9.0, 2, x, y);
    CHECK(relative_deviation(got, fd_in_x(0.7, 2, 9.0, 2, x, y)) < 1e-6);
  }

  CHECK_THROWS_AS(kernel_K_tilde(1.0, 1, 2.0, 3, vec1(0.0), vec1(0.0)),
                  std::invalid_argument);
}

TEST_CASE("automatic spectral truncation") {
  for (double t : {0.1, 0.5, 2.0})
    for (int N : {0, 2, 4}) {
      int K = default_spectral_truncation(t, N);
      CHECK(K >= N + 5);
      // The first dropped term is below 1e-16 of the largest retained one.
      double log_peak = N == 0 ? 0.0 : -1e300;
      for (int k = 1; k <= K && N > 0; ++k)
        log_peak = std::max(log_peak, N * std::log(double(k)) - t * k);
      double log_term = (N > 0 ? N * std::log(double(K)) : 0.0) - t * K;
      CHECK(log_term <= log_peak + std::log(1e-16) + 1e-9);
    }
}

TEST_CASE("kernels verify suite passes") {
  CHECK(all_pass(kernels_suite()));
}
