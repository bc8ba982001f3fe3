// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds at its stated tolerance.  Usage: ouk_acceptance [path-to-cli]
// (the CLI path may also come from the OUK_CLI environment variable).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ouk/bounds.hpp"
#include "ouk/checks.hpp"
#include "ouk/weyl.hpp"

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

bool g_all_pass = true;

void run_criterion(int index, const std::string& name, const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %2d. %s (%s) [%.1fs]\n", out.pass ? "PASS" : "FAIL", index, name.c_str(),
              out.detail.c_str(), secs);
  std::fflush(stdout);
  g_all_pass = g_all_pass && out.pass;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

struct CliRun {
  int exit_code;
  std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  static int counter = 0;
  std::string file = "/tmp/ouk_acceptance_" + std::to_string(counter++) + ".txt";
  int status = std::system((cli + " " + args + " > " + file + " 2>/dev/null").c_str());
  std::ifstream in(file, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(file.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

Outcome suite_outcome(const std::vector<ouk::CheckResult>& results) {
  int failed = 0;
  double worst = 0.0;
  std::string worst_name;
  for (const auto& r : results) {
    if (!r.pass) {
      ++failed;
      if (worst_name.empty()) worst_name = r.name;
    }
    worst = std::max(worst, r.tolerance > 0 ? r.residual / r.tolerance : r.residual);
  }
  if (failed > 0)
    return {false, std::to_string(failed) + " checks failed, first: " + worst_name};
  return {true, std::to_string(results.size()) + " checks, worst residual at " +
                    fmt(worst) + " of tolerance"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : (std::getenv("OUK_CLI") ? std::getenv("OUK_CLI") : "");

  run_criterion(1, "normal ordering of (xy)^m matches Stirling coefficients, m <= 12", [] {
    bool ok = ouk::normal_order_balanced_power_matches_stirling(12);
    return Outcome{ok, ok ? "exact coefficient equality" : "coefficient mismatch"};
  });

  run_criterion(2, "push-through identity family and homogeneity classification, m <= 10", [] {
    bool a = ouk::check_push_through_identities(10);
    bool b = ouk::check_homogeneity_classification();
    return Outcome{a && b, a && b ? "exact normal-form equalities" : "identity mismatch"};
  });

  run_criterion(3, "Stirling suite: partition oracle, power sums, recursion", [] {
    return suite_outcome(ouk::stirling_suite());
  });

  run_criterion(4, "Hermite identity suite", [] {
    return suite_outcome(ouk::hermite_suite());
  });

  run_criterion(5, "closed-form kernel vs spectral and finite-difference oracles", [] {
    ouk::KernelGridSpec spec;
    spec.dims = {1, 2, 3};
    spec.times = {0.1, 0.5, 1.0, 2.0};
    spec.coords = {-3.0, -1.0, 0.0, 0.5, 2.0};
    spec.max_order = 4;
    spec.dim3_pair_stride = 7;
    auto res = ouk::kernel_oracle_grid(spec);
    bool ok = res.max_spectral_dev <= 1e-9 && res.max_fd_dev <= 1e-5 &&
              res.comparisons >= 10000 && res.mehler_positive && res.order0_collapses &&
              res.max_symmetry_dev <= 1e-9 && res.max_assembly_dev <= 1e-12;
    return Outcome{ok, std::to_string(res.comparisons) +
                           " comparisons, spectral " + fmt(res.max_spectral_dev) +
                           ", fd " + fmt(res.max_fd_dev) + ", symmetry " +
                           fmt(res.max_symmetry_dev) + ", assembly " +
                           fmt(res.max_assembly_dev)};
  });

  run_criterion(6, "eigenfunction action under quadrature, |alpha| <= 8, N <= 3, d <= 2", [] {
    ouk::EigenfunctionGridSpec spec;
    spec.max_total_degree = 8;
    spec.max_order = 3;
    spec.max_dim = 2;
    spec.times = {0.2, 1.0, 2.0};
    spec.coords = {-1.5, 0.2, 1.0};
    spec.rule_order = 30;
    double worst = ouk::eigenfunction_grid_max_residual(spec);
    return Outcome{worst <= 1e-8, "max residual " + fmt(worst)};
  });

  run_criterion(7, "semigroup composition of kernels, N + M <= 3, d = 1", [] {
    ouk::CompositionGridSpec spec;
    double worst = ouk::composition_grid_max_deviation(spec);
    return Outcome{worst <= 1e-7, "max deviation " + fmt(worst)};
  });

  run_criterion(8, "comparison-inequality slacks on 1e5 randomized points", [] {
    double min_slack = ouk::lemma62_min_slack(100000);
    return Outcome{min_slack >= -1e-12, "min slack " + fmt(min_slack)};
  });

  run_criterion(9, "sup-ratio sweeps: no violations, stable under 2x refinement", [] {
    std::string detail;
    bool ok = true;
    for (auto [order, alpha] : {std::pair<int, double>{1, 64.0}, {2, 128.0}}) {
      ouk::BoundSweepSpec base;
      base.order = order;
      base.alpha = alpha;
      base.t_grid = {0.05, 0.95, 31};
      base.x_grid = {-3.0, 3.0, 61};
      base.y_grid = {-3.0, 3.0, 61};
      ouk::BoundSweepSpec fine = base;
      fine.t_grid.count = 61;
      fine.x_grid.count = 121;
      fine.y_grid.count = 121;
      for (auto which : {ouk::SweepKernel::K, ouk::SweepKernel::KTilde}) {
        auto b = ouk::theorem63_sweep(base, which);
        auto f = ouk::theorem63_sweep(fine, which);
        double change = std::abs(f.max_ratio - b.max_ratio) / b.max_ratio;
        ok = ok && b.violations == 0 && f.violations == 0 && change < 0.05;
        detail += (which == ouk::SweepKernel::K ? "K" : "Kt");
        detail += "(N=" + std::to_string(order) + "): ratio " + fmt(b.max_ratio) +
                  " change " + fmt(change) + "; ";
      }
    }
    return Outcome{ok, detail};
  });

  run_criterion(10, "reproducing-formula constant, N <= 5, alpha in {2, 4, 10}", [] {
    double worst_dev = 0.0, worst_closed = 0.0;
    for (int order = 0; order <= 5; ++order)
      for (double alpha : {2.0, 4.0, 10.0}) {
        auto res = ouk::calderon_constant(order, alpha, {1, 5, 40});
        worst_dev = std::max(worst_dev, res.max_deviation / res.closed_form);
        worst_closed = std::max(
            worst_closed, std::abs(res.integral_value - res.closed_form) / res.closed_form);
      }
    bool ok = worst_dev <= 1e-10 && worst_closed <= 1e-10;
    return Outcome{ok, "eigenvalue spread " + fmt(worst_dev) + ", closed-form deviation " +
                           fmt(worst_closed)};
  });

  run_criterion(11, "CLI determinism and exit-code contract", [&cli] {
    if (cli.empty()) return Outcome{false, "no CLI path (argv[1] or OUK_CLI)"};
    bool ok = true;
    std::string detail;
    for (const std::string args :
         {std::string("eval --t 1 --N 1 --dim 1 --x 0 --y 0 --oracle spectral"),
          std::string("verify --suite stirling"),
          std::string("bounds --calderon --N 2 --alpha 3 --n-list 1,5,40"),
          std::string("table --t-range 0.5:1:2 --x-range -1:1:3 --y-range 0:0:1 --N 1")}) {
      auto a = run_cli(cli, args);
      auto b = run_cli(cli, args);
      if (a.output != b.output || a.output.empty() || a.exit_code != 0) {
        ok = false;
        detail = "non-deterministic or failing: " + args;
        break;
      }
    }
    if (ok) {
      struct Case {
        std::string args;
        int expect;
      };
      for (const Case& c :
           {Case{"eval --t 0 --N 0 --dim 1 --x 0 --y 0", 2},
            Case{"verify --suite nonsense", 2},
            Case{"bounds --kernel K --N 1 --alpha 1.5 --C 1 --T 1 --dim 1 "
                 "--t-range 0.1:0.9:5 --x-range -1:1:5 --y-range -1:1:5",
                 3},
            Case{"bounds --kernel K --N 1 --alpha 64 --C 1 --T 1 --dim 1 "
                 "--t-range 0.1:0.9:3 --x-range -1:1:5 --y-range -1:1:5 --ratio-cap 0",
                 1},
            Case{"verify --suite stirling", 0}}) {
        auto r = run_cli(cli, c.args);
        if (r.exit_code != c.expect) {
          ok = false;
          detail = "exit " + std::to_string(r.exit_code) + " != " +
                   std::to_string(c.expect) + " for: " + c.args;
          break;
        }
      }
    }
    return Outcome{ok, ok ? "byte-identical reruns; exit codes 0/1/2/3 honored" : detail};
  });

  std::printf("%s\n", g_all_pass ? "ACCEPTANCE: all criteria passed"
                                 : "ACCEPTANCE: some criteria FAILED");
  return g_all_pass ? 0 : 1;
}
