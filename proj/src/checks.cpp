#include "ouk/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "ouk/bounds.hpp"
#include "ouk/combinatorics.hpp"
#include "ouk/finite_difference.hpp"
#include "ouk/hermite.hpp"
#include "ouk/kernels.hpp"
#include "ouk/semigroup.hpp"
#include "ouk/weyl.hpp"

namespace ouk {

namespace {

CheckResult residual_check(std::string name, double residual, double default_tol,
                           double floor, const SuiteTolerance& tol) {
  double eff = tol.value ? std::max(*tol.value, floor) : default_tol;
  return {std::move(name), residual, eff, residual <= eff};
}

CheckResult exact_check(std::string name, bool ok) {
  return {std::move(name), ok ? 0.0 : 1.0, 0.0, ok};
}

std::vector<Eigen::VectorXd> tensor_points(const std::vector<double>& coords, int dim) {
  std::vector<Eigen::VectorXd> pts;
  const int k = static_cast<int>(coords.size());
  long long total = 1;
  for (int i = 0; i < dim; ++i) total *= k;
  pts.reserve(total);
  for (long long code = 0; code < total; ++code) {
    Eigen::VectorXd v(dim);
    long long c = code;
    for (int i = dim - 1; i >= 0; --i) {
      v[i] = coords[c % k];
      c /= k;
    }
    pts.push_back(std::move(v));
  }
  return pts;
}

}  // namespace

std::vector<Int> partition_counts_by_blocks(int n_elements) {
  if (n_elements < 0) throw std::invalid_argument("partition_counts_by_blocks: n must be >= 0");
  std::vector<Int> counts(n_elements + 1, Int(0));
  if (n_elements == 0) {
    counts[0] = 1;
    return counts;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(n_elements, 0);
  auto recurse = [&](auto&& self, int i, int current_max) -> void {
    if (i == n_elements) {
      counts[current_max + 1] += 1;
      return;
    }
    for (int b = 0; b <= current_max + 1; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(current_max, b));
    }
  };
  recurse(recurse, 1, 0);
  return counts;
}

std::vector<CheckResult> stirling_suite(const SuiteTolerance& tol) {
  (void)tol;  // all checks in this suite are exact
  std::vector<CheckResult> out;

  {
    bool ok = true;
    for (int N = 0; N <= 10 && ok; ++N) {
      auto counts = partition_counts_by_blocks(N);
      Int row_sum = 0;
      for (int n = 0; n <= N; ++n) {
        if (stirling2(N, n) != counts[n]) ok = false;
        row_sum += stirling2(N, n);
      }
      Int bell = 0;
      for (const Int& c : counts) bell += c;
      if (row_sum != bell) ok = false;
    }
    out.push_back(exact_check("stirling matches brute-force partition counts, N <= 10", ok));
  }
  {
    bool ok = true;
    for (int N = 1; N <= 30 && ok; ++N)
      for (int n = 1; n <= N; ++n)
        if (stirling2(N, n) != n * stirling2(N - 1, n) + stirling2(N - 1, n - 1)) {
          ok = false;
          break;
        }
    out.push_back(exact_check("stirling recursion with block-count factor, N <= 30", ok));
  }
  out.push_back(exact_check("power sums expand in falling factorials, N, j <= 20",
                            check_stirling_generating(20, 20)));
  {
    bool ok = true;
    for (int N = 0; N <= 8 && ok; ++N) {
      for (int d = 1; d <= 4 && ok; ++d) {
        auto comps = compositions(N, d);
        if (Int(comps.size()) != binomial(N + d - 1, d - 1)) ok = false;
        for (std::size_t i = 0; i < comps.size() && ok; ++i) {
          if (comps[i].order() != N) ok = false;
          if (i > 0 && !(comps[i - 1].components() < comps[i].components())) ok = false;
        }
      }
    }
    out.push_back(exact_check("compositions: count, sums, strict lexicographic order", ok));
  }
  {
    bool ok = falling_factorial(5, 0) == 1 && falling_factorial(5, 2) == 20 &&
              falling_factorial(3, 4) == 0 && multinomial(3, MultiIndex{3}) == 1 &&
              multinomial(3, MultiIndex{1, 1, 1}) == 6 &&
              multinomial(4, MultiIndex{2, 2}) == 6;
    out.push_back(exact_check("falling factorial and multinomial spot values", ok));
  }
  return out;
}

bool check_homogeneity_classification() {
  const WeylElement X = WeylElement::x(), Y = WeylElement::y();
  bool ok = true;
  ok = ok && WeylElement::monomial(3, 3, 1).weighted_degree() == std::optional<int>(0);
  ok = ok && WeylElement::monomial(2, 5, 1).weighted_degree() == std::optional<int>(-3);
  ok = ok && (WeylElement::monomial(2, 1, 1) + WeylElement::monomial(1, 2, 1))
                     .weighted_degree() == std::nullopt;
  ok = ok && (X * Y + WeylElement::monomial(3, 3, 5)).homogeneity_preserving();
  ok = ok && !WeylElement::monomial(2, 1, 1).homogeneity_preserving();
  ok = ok && (X * Y).pow(7).homogeneity_preserving();
  // Unbalanced left factors shift every weighted degree by a - b != 0.
  for (int a = 0; a <= 3 && ok; ++a)
    for (int b = 0; b <= 3 && ok; ++b) {
      if (a == b) continue;
      for (int n = 0; n <= 3 && ok; ++n) {
        auto prod = WeylElement::monomial(a, b, 1) * WeylElement::monomial(n, n, 1);
        ok = prod.weighted_degree() == std::optional<int>(a - b);
      }
    }
  return ok;
}

std::vector<CheckResult> weyl_suite(const SuiteTolerance& tol) {
  (void)tol;
  std::vector<CheckResult> out;
  const WeylElement X = WeylElement::x(), Y = WeylElement::y();

  out.push_back(exact_check("commutator x y - y x = -1",
                            X * Y - Y * X == WeylElement::constant(-1)));
  out.push_back(exact_check("(xy)^m expands with Stirling coefficients, m <= 12",
                            normal_order_balanced_power_matches_stirling(12)));
  out.push_back(exact_check("push-through identity family, m <= 10",
                            check_push_through_identities(10)));
  out.push_back(exact_check("weighted degree and homogeneity classification",
                            check_homogeneity_classification()));
  {
    std::vector<WeylElement> sample = {
        X, Y, X * Y, WeylElement::monomial(2, 1, 1),
        WeylElement::monomial(1, 2, Rat(1, 2)) + WeylElement::constant(3),
        (X * Y).pow(2), WeylElement::monomial(3, 3, 1),
        WeylElement::monomial(0, 2, -2) + WeylElement::monomial(2, 0, 1)};
    bool ok = true;
    for (const auto& a : sample)
      for (const auto& b : sample)
        for (int j = 0; j <= 8 && ok; ++j) {
          TPoly tj = TPoly::t_power(j);
          ok = model_apply(a * b, tj) == model_apply(a, model_apply(b, tj));
        }
    out.push_back(exact_check("faithful action on polynomials represents products", ok));
  }
  {
    bool ok = true;
    for (int N = 0; N <= 8 && ok; ++N)
      for (int j = 0; j <= 8 && ok; ++j) {
        TPoly expect;
        expect.set_coeff(j, Rat(int_pow(Int(j), N)));
        ok = model_apply((X * Y).pow(N), TPoly::t_power(j)) == expect;
      }
    out.push_back(exact_check("(xy)^N acts on t^j as j^N, N, j <= 8", ok));
  }
  {
    // Substituting x^i y^i -> (j)_i in the expansion of (xy)^k recovers j^k.
    bool ok = true;
    for (int k = 0; k <= 12 && ok; ++k) {
      WeylElement p = (X * Y).pow(k);
      for (int j = 0; j <= 20 && ok; ++j) {
        Rat acc = 0;
        for (const auto& [mono, c] : p.terms()) {
          if (mono.x_pow != mono.y_pow) ok = false;
          acc += c * Rat(falling_factorial(j, mono.x_pow));
        }
        ok = ok && acc == Rat(int_pow(Int(j), k));
      }
    }
    out.push_back(exact_check("constant-term substitution recovers power sums", ok));
  }
  return out;
}

std::vector<CheckResult> hermite_suite(const SuiteTolerance& tol) {
  std::vector<CheckResult> out;

  {
    double worst = 0.0;
    for (double x = -3.0; x <= 3.0; x += 1.0)
      for (double t : {-1.0, -0.5, 0.25, 0.5, 1.0})
        worst = std::max(worst, check_generating_function(x, t, 80));
    out.push_back(residual_check("generating function partial sums", worst, 1e-10, 0.0, tol));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= 30; ++n)
      for (double x : {-3.0, -1.2, 0.0, 0.7, 3.0})
        for (double y : {-3.0, -1.1, 0.0, 0.7, 3.0})
          worst = std::max(worst, check_binomial_identity(n, x, y));
    out.push_back(residual_check("binomial shift identity, n <= 30", worst, 1e-10, 0.0, tol));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
      auto rule = gauss_hermite_rule(n + 30);
      for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0})
        worst = std::max(worst, check_integral_representation(n, x, rule));
    }
    out.push_back(residual_check("oscillatory integral representation, n <= 20", worst,
                                 1e-8, 0.0, tol));
  }
  {
    auto rule = gauss_hermite_rule(30);
    double worst = 0.0;
    for (int m = 0; m <= 20; ++m)
      for (int n = 0; n <= 20; ++n) {
        double acc = 0.0;
        for (int i = 0; i < rule.order(); ++i)
          acc += rule.weights[i] * hermite_normalized(m, rule.nodes[i]) *
                 hermite_normalized(n, rule.nodes[i]);
        worst = std::max(worst, std::abs(acc - (m == n ? 1.0 : 0.0)));
      }
    out.push_back(residual_check("orthonormality under the Gaussian measure", worst,
                                 1e-11, 0.0, tol));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= 40; ++n)
      for (double x : {0.3, 1.0, 2.7, 5.0}) {
        double a = hermite(n, -x), b = (n % 2 == 0 ? 1.0 : -1.0) * hermite(n, x);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
      }
    out.push_back(residual_check("parity H_n(-x) = (-1)^n H_n(x)", worst, 1e-12, 0.0, tol));
  }
  {
    bool ok = true;
    for (int n = 0; n <= 15 && ok; ++n)
      ok = hermite_coefficients(n) == hermite_coefficients_rodrigues(n);
    out.push_back(exact_check("recurrence and Rodrigues coefficients agree, n <= 15", ok));
  }
  {
    // (1/2) H_n'' - x H_n' = -n H_n at the exact coefficient level.
    bool ok = true;
    for (int n = 0; n <= 15 && ok; ++n) {
      auto c = hermite_coefficients(n);
      for (int k = 0; k <= n && ok; ++k) {
        Int second = (k + 2 <= n) ? Int((k + 2) * (k + 1)) * c[k + 2] : Int(0);
        Int lhs = second / 2 - k * c[k];
        ok = lhs == -n * c[k];
      }
    }
    out.push_back(exact_check("one-dimensional generator eigenvalue identity, n <= 15", ok));
  }
  {
    double worst = 0.0;
    for (int N = 1; N <= 4; ++N)
      for (double x : {-2.0, 0.0, 0.7, 2.0})
        for (double t : {0.1, 0.5, 1.2, 2.0})
          worst = std::max(worst, check_generating_derivative(N, x, t));
    out.push_back(residual_check("time derivatives of the generating kernel (FD)", worst,
                                 1e-5, 1e-5, tol));
  }
  {
    double worst = 0.0;
    auto r2 = gauss_hermite_rule(2);
    worst = std::max(worst, std::abs(r2.nodes[1] - 1.0 / std::sqrt(2.0)));
    worst = std::max(worst, std::abs(r2.nodes[0] + 1.0 / std::sqrt(2.0)));
    worst = std::max(worst, std::abs(r2.weights[0] - 0.5));
    worst = std::max(worst, std::abs(r2.weights[1] - 0.5));
    for (int order : {1, 2, 5, 20, 41, 64}) {
      auto r = gauss_hermite_rule(order);
      worst = std::max(worst, std::abs(r.weights.sum() - 1.0));
      for (int i = 0; i < order; ++i)
        worst = std::max(worst, std::abs(r.nodes[i] + r.nodes[order - 1 - i]));
    }
    {
      auto r = gauss_hermite_rule(20);
      double m4 = 0.0;
      for (int i = 0; i < 20; ++i) m4 += r.weights[i] * std::pow(r.nodes[i], 4);
      worst = std::max(worst, std::abs(m4 - 0.75));
    }
    {
      // Even moments of dgamma: (2m-1)!! / 2^m, exact for 2m <= 2*order - 1.
      auto r = gauss_hermite_rule(15);
      double expect = 1.0;
      for (int m = 1; m <= 14; ++m) {
        expect *= (2.0 * m - 1.0) / 2.0;
        double mom = 0.0;
        for (int i = 0; i < 15; ++i) mom += r.weights[i] * std::pow(r.nodes[i], 2 * m);
        worst = std::max(worst, std::abs(mom - expect) / expect);
      }
    }
    out.push_back(residual_check("quadrature nodes, weights, and moments", worst,
                                 1e-13, 0.0, tol));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= 40; ++n) {
      double norm = std::sqrt(to_double(int_pow(Int(2), n) * factorial(n)));
      for (double x : {-2.5, -0.4, 0.9, 3.0}) {
        double a = hermite_normalized(n, x) * norm, b = hermite(n, x);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
      }
    }
    MultiIndex alpha{2, 0, 3};
    Eigen::VectorXd x(3);
    x << 0.3, -1.0, 2.0;
    double un = hermite_multi(alpha, x, false);
    double no = hermite_multi(alpha, x, true);
    double norm = std::sqrt(to_double(int_pow(Int(2), alpha.order()) * alpha.factorial()));
    worst = std::max(worst, std::abs(no * norm - un) / std::max(1.0, std::abs(un)));
    double prod = 1.0;
    for (int i = 0; i < 3; ++i) prod *= hermite_normalized(alpha[i], x[i]);
    worst = std::max(worst, std::abs(no - prod) / std::max(1.0, std::abs(prod)));
    out.push_back(residual_check("normalization consistency", worst, 1e-12, 0.0, tol));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n)
      for (double x : {-1.7, 0.0, 0.5, 2.0}) {
        auto f = [n](double s) { return hermite(n, s); };
        double fd = central_derivative(f, x, 1, 1e-3, 3);
        double an = hermite_derivative(n, x);
        worst = std::max(worst, std::abs(fd - an) / std::max(1.0, std::abs(an)));
      }
    out.push_back(residual_check("derivative identity vs finite differences", worst,
                                 1e-7, 1e-7, tol));
  }
  return out;
}

KernelGridResult kernel_oracle_grid(const KernelGridSpec& spec) {
  KernelGridResult res;
  int kmax = 0;
  for (double t : spec.times)
    kmax = std::max(kmax, default_spectral_truncation(t, spec.max_order));

  for (int d : spec.dims) {
    const auto points = tensor_points(spec.coords, d);
    const long long npts = static_cast<long long>(points.size());
    const long long npairs = npts * npts;
    const long long stride = (d >= 3 && spec.dim3_pair_stride > 1) ? spec.dim3_pair_stride : 1;
    for (long long pair = 0; pair < npairs; pair += stride) {
      const Eigen::VectorXd& x = points[pair / npts];
      const Eigen::VectorXd& y = points[pair % npts];
      SpectralProfile profile(x, y, kmax);
      for (double t : spec.times) {
        if (mehler_kernel(t, x, y) <= 0.0) res.mehler_positive = false;
        for (int N = 0; N <= spec.max_order; ++N) {
          KernelQuery q{t, N, x, y};
          const double closed = derivative_kernel(q);
          const SpectralEval spectral = profile.eval(t, N);
          res.max_spectral_dev =
              std::max(res.max_spectral_dev,
                       relative_deviation_scaled(closed, spectral.value,
                                                 1e-3 * spectral.term_scale));
          ++res.comparisons;
          if (N <= 4) {
            const double fd = derivative_kernel_fd(q);
            res.max_fd_dev = std::max(res.max_fd_dev, relative_deviation(closed, fd));
          }
          KernelQuery swapped{t, N, y, x};
          res.max_symmetry_dev = std::max(
              res.max_symmetry_dev, relative_deviation(closed, derivative_kernel(swapped)));
          res.max_assembly_dev =
              std::max(res.max_assembly_dev,
                       relative_deviation(closed, derivative_kernel_factored(q)));
          if (N == 0 && closed != mehler_kernel(t, x, y)) res.order0_collapses = false;
        }
      }
    }
  }
  return res;
}

double eigenfunction_grid_max_residual(const EigenfunctionGridSpec& spec) {
  const auto rule = gauss_hermite_rule(spec.rule_order);
  double worst = 0.0;
  for (int d = 1; d <= spec.max_dim; ++d) {
    std::vector<Eigen::VectorXd> x_points;
    for (std::size_t s = 0; s < spec.coords.size(); ++s) {
      Eigen::VectorXd x(d);
      for (int i = 0; i < d; ++i)
        x[i] = spec.coords[(s + i) % spec.coords.size()];
      x_points.push_back(std::move(x));
    }
    for (int total = 0; total <= spec.max_total_degree; ++total)
      for (const MultiIndex& alpha : compositions(total, d))
        for (int N = 0; N <= spec.max_order; ++N)
          for (double t : spec.times)
            worst = std::max(worst, eigenfunction_check(alpha, t, N, x_points, rule));
  }
  return worst;
}

double composition_grid_max_deviation(const CompositionGridSpec& spec) {
  const auto rule = gauss_hermite_rule(spec.rule_order);
  double worst = 0.0;
  for (double s : spec.times)
    for (double t : spec.times)
      for (int N = 0; N <= spec.max_total_order; ++N)
        for (int M = 0; N + M <= spec.max_total_order; ++M)
          for (double x : spec.coords)
            for (double y : spec.coords) {
              double lhs = compose_kernels(s, N, t, M, x, y, rule);
              double rhs = derivative_kernel_1d(s + t, N + M, x, y);
              worst = std::max(worst, relative_deviation(lhs, rhs));
            }
  return worst;
}

double lemma62_min_slack(long long samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() {  // uniform in (0, 1], bit-stable across platforms
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  };
  double min_slack = std::numeric_limits<double>::infinity();
  for (long long i = 0; i < samples; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const double alpha = 1.0 + 99.0 * unit();
    const double t = 5.0 * unit();
    Eigen::VectorXd x(d), y(d);
    for (int k = 0; k < d; ++k) {
      x[k] = -5.0 + 10.0 * unit();
      y[k] = -5.0 + 10.0 * unit();
    }
    auto [s1, s2] = lemma62_check(alpha, t, x, y);
    min_slack = std::min({min_slack, s1, s2});
  }
  return min_slack;
}

std::vector<CheckResult> kernels_suite(const SuiteTolerance& tol) {
  std::vector<CheckResult> out;
  KernelGridResult grid = kernel_oracle_grid(KernelGridSpec{});
  out.push_back(residual_check("closed form vs eigenfunction series", grid.max_spectral_dev,
                               1e-9, 0.0, tol));
  out.push_back(residual_check("closed form vs time differences", grid.max_fd_dev,
                               1e-5, 1e-5, tol));
  out.push_back(residual_check("symmetry in x and y", grid.max_symmetry_dev, 1e-9, 0.0, tol));
  out.push_back(residual_check("both d-dimensional assemblies agree", grid.max_assembly_dev,
                               1e-12, 0.0, tol));
  out.push_back(exact_check("order 0 reproduces the Mehler kernel exactly",
                            grid.order0_collapses));
  out.push_back(exact_check("Mehler kernel positive on the grid", grid.mehler_positive));
  {
    CompositionGridSpec comp;
    comp.times = {0.4, 1.0};
    comp.coords = {-1.5, 0.0, 0.8};
    out.push_back(residual_check("semigroup composition of kernels",
                                 composition_grid_max_deviation(comp), 1e-7, 0.0, tol));
  }
  return out;
}

std::vector<CheckResult> operator_suite(const SuiteTolerance& tol) {
  std::vector<CheckResult> out;
  const auto rule = gauss_hermite_rule(30);
  {
    double worst = 0.0;
    for (int d : {1, 2}) {
      SampledFunction one{[](const Eigen::VectorXd&) { return 1.0; }, d};
      for (double t : {0.3, 1.0})
        for (double c : {-1.0, 0.5}) {
          Eigen::VectorXd x = Eigen::VectorXd::Constant(d, c);
          worst = std::max(worst, std::abs(apply_semigroup_derivative(one, t, 0, x, rule) - 1.0));
          worst = std::max(worst, std::abs(apply_semigroup_derivative(one, t, 1, x, rule)));
        }
    }
    out.push_back(residual_check("constants preserved and annihilated", worst, 1e-13, 0.0, tol));
  }
  out.push_back(residual_check("eigenfunction action",
                               eigenfunction_grid_max_residual(EigenfunctionGridSpec{}),
                               1e-8, 0.0, tol));
  {
    double worst = 0.0;
    {
      Eigen::VectorXd x(2);
      x << 1.0, 1.0;
      worst = std::max(worst, multinomial_reduction_check(MultiIndex{1, 1}, 1.0, 2, x));
      worst = std::max(worst, multinomial_reduction_check(MultiIndex{1, 1}, 1.0, 0, x));
    }
    {
      Eigen::VectorXd x(3);
      x << 0.5, -1.0, 2.0;
      worst = std::max(worst, multinomial_reduction_check(MultiIndex{3, 0, 2}, 0.4, 3, x));
    }
    out.push_back(residual_check("multinomial reduction to one dimension", worst,
                                 1e-12, 0.0, tol));
  }
  {
    SampledFunction u{[](const Eigen::VectorXd& y) { return hermite_normalized(2, y[0]); }, 1};
    SampledFunction v{[](const Eigen::VectorXd& y) { return hermite_normalized(3, y[0]); }, 1};
    SampledFunction w{[](const Eigen::VectorXd& y) {
                        return 2.5 * hermite_normalized(2, y[0]) - 1.25 * hermite_normalized(3, y[0]);
                      },
                      1};
    double worst = 0.0;
    for (double t : {0.4, 1.1})
      for (int N : {0, 1, 2}) {
        Eigen::VectorXd x = Eigen::VectorXd::Constant(1, 0.6);
        double lhs = apply_semigroup_derivative(w, t, N, x, rule);
        double rhs = 2.5 * apply_semigroup_derivative(u, t, N, x, rule) -
                     1.25 * apply_semigroup_derivative(v, t, N, x, rule);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    out.push_back(residual_check("linearity in the integrand", worst, 1e-13, 0.0, tol));
  }
  {
    SampledFunction u{[](const Eigen::VectorXd& y) { return std::pow(y[0], 8); }, 1};
    const auto rule40 = gauss_hermite_rule(40);
    double worst = 0.0;
    for (double t : {0.3, 1.0})
      for (int N : {0, 1, 2, 3}) {
        Eigen::VectorXd x = Eigen::VectorXd::Constant(1, 0.9);
        double a = apply_semigroup_derivative(u, t, N, x, gauss_hermite_rule(20));
        double b = apply_semigroup_derivative(u, t, N, x, rule40);
        worst = std::max(worst, relative_deviation(a, b));
      }
    out.push_back(residual_check("stability under quadrature refinement", worst,
                                 1e-12, 0.0, tol));
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteTolerance& tol) {
  if (name == "stirling") return stirling_suite(tol);
  if (name == "weyl") return weyl_suite(tol);
  if (name == "hermite") return hermite_suite(tol);
  if (name == "kernels") return kernels_suite(tol);
  if (name == "operator") return operator_suite(tol);
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"stirling", "weyl", "hermite", "kernels", "operator"}) {
      auto part = run_suite(s, tol);
      for (auto& r : part) r.name = std::string(s) + ": " + r.name;
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace ouk
