// Command-line front end: kernel evaluation, identity-verification suites,
// bound sweeps, and grid tabulation with machine-readable output.
//
// Exit codes: 0 success, 1 check failure, 2 usage or domain error,
// 3 parameters outside the bound hypotheses.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ouk/bounds.hpp"
#include "ouk/checks.hpp"
#include "ouk/format.hpp"
#include "ouk/kernels.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOutOfHypothesis = 3;

ordered_json new_record(const std::string& command) {
  ordered_json j;
  j["schema_version"] = "1";
  j["command"] = command;
  j["params"] = ordered_json::object();
  j["rows"] = ordered_json::array();
  j["status"] = "info";
  return j;
}

void emit(const ordered_json& record) { std::cout << record.dump(2) << "\n"; }

Eigen::VectorXd parse_vector(const std::string& csv, int dim, const std::string& flag) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": cannot parse '" + item + "' as a real number");
    }
  }
  if (static_cast<int>(vals.size()) != dim)
    throw std::invalid_argument(flag + ": expected " + std::to_string(dim) +
                                " comma-separated values");
  Eigen::VectorXd out(dim);
  for (int i = 0; i < dim; ++i) out[i] = vals[i];
  return out;
}

ouk::GridRange parse_range(const std::string& spec, const std::string& flag) {
  double lo = 0, hi = 0;
  int count = 0;
  char c1 = 0, c2 = 0;
  std::stringstream ss(spec);
  if (!(ss >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || !ss.eof() ||
      count < 1)
    throw std::invalid_argument(flag + ": expected lo:hi:count with count >= 1, got '" +
                                spec + "'");
  return {lo, hi, count};
}

ordered_json json_vector(const Eigen::VectorXd& v) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

// ---- eval ----------------------------------------------------------------

struct EvalArgs {
  double t = 1.0;
  int order = 0;
  int dim = 1;
  std::string x, y;
  std::string oracle;  // "", "spectral", "fd"
  int trunc = 0;
  double fd_step = 0.0;
};

int run_eval(const EvalArgs& a) {
  ouk::KernelQuery q{a.t, a.order, parse_vector(a.x, a.dim, "--x"),
                     parse_vector(a.y, a.dim, "--y")};
  const double value = ouk::derivative_kernel(q);

  ordered_json rec = new_record("eval");
  rec["params"] = {{"t", a.t},     {"N", a.order}, {"dim", a.dim},
                   {"x", a.x},     {"y", a.y},     {"oracle", a.oracle}};
  ordered_json row;
  row["inputs"] = {{"t", a.t}, {"N", a.order}, {"x", json_vector(q.x)}, {"y", json_vector(q.y)}};
  row["value"] = value;
  if (!a.oracle.empty()) {
    ouk::OracleControls c;
    c.trunc = a.trunc;
    c.fd_step = a.fd_step;
    double ov = a.oracle == "spectral" ? ouk::derivative_kernel_spectral(q, c)
                                       : ouk::derivative_kernel_fd(q, c);
    row["oracle_value"] = ov;
    row["deviation"] = ouk::relative_deviation(value, ov);
  }
  rec["rows"].push_back(row);
  emit(rec);
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const std::string& suite, std::optional<double> tol) {
  auto results = ouk::run_suite(suite, ouk::SuiteTolerance{tol});
  ordered_json rec = new_record("verify");
  rec["params"] = {{"suite", suite}, {"tol", tol ? ordered_json(*tol) : ordered_json(nullptr)}};
  for (const auto& r : results) {
    rec["rows"].push_back({{"name", r.name},
                           {"residual", r.residual},
                           {"tolerance", r.tolerance},
                           {"pass", r.pass}});
  }
  bool ok = ouk::all_pass(results);
  rec["status"] = ok ? "pass" : "fail";
  emit(rec);
  return ok ? kExitOk : kExitCheckFailure;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
  bool calderon = false;
  std::string kernel = "K";
  int order = 1;
  double alpha = 64.0;
  double C = 1.0;
  double T = 1.0;
  int dim = 1;
  int j = 1;
  std::string t_range = "0.05:0.95:31";
  std::string x_range = "-3:3:61";
  std::string y_range = "-3:3:61";
  double ratio_cap = 1.0;
  std::string n_list = "1,5,40";
  int quad_points = 2000;
  double tol = 1e-10;
};

int run_bounds(const BoundsArgs& a) {
  if (a.calderon) {
    std::vector<int> ns;
    std::stringstream ss(a.n_list);
    std::string item;
    while (std::getline(ss, item, ',')) ns.push_back(std::stoi(item));
    auto res = ouk::calderon_constant(a.order, a.alpha, ns, a.quad_points);
    bool ok = res.max_deviation <= a.tol &&
              std::abs(res.integral_value - res.closed_form) <= a.tol * res.closed_form;
    ordered_json rec = new_record("bounds");
    rec["params"] = {{"mode", "calderon"}, {"N", a.order},          {"alpha", a.alpha},
                     {"n_list", a.n_list}, {"quad_points", a.quad_points}, {"tol", a.tol}};
    rec["rows"].push_back({{"integral", res.integral_value},
                           {"constant", res.constant},
                           {"closed_form", res.closed_form},
                           {"max_deviation", res.max_deviation}});
    rec["status"] = ok ? "pass" : "fail";
    emit(rec);
    return ok ? kExitOk : kExitCheckFailure;
  }

  ouk::BoundSweepSpec spec;
  spec.order = a.order;
  spec.alpha = a.alpha;
  spec.C = a.C;
  spec.T = a.T;
  spec.dim = a.dim;
  spec.deriv_coordinate = a.j;
  spec.t_grid = parse_range(a.t_range, "--t-range");
  spec.x_grid = parse_range(a.x_range, "--x-range");
  spec.y_grid = parse_range(a.y_range, "--y-range");
  spec.ratio_cap = a.ratio_cap;
  ouk::SweepKernel which =
      a.kernel == "Ktilde" ? ouk::SweepKernel::KTilde : ouk::SweepKernel::K;

  auto rep = ouk::theorem63_sweep(spec, which);
  ordered_json rec = new_record("bounds");
  rec["params"] = {{"mode", "sweep"},
                   {"kernel", a.kernel},
                   {"N", a.order},
                   {"alpha", a.alpha},
                   {"C", a.C},
                   {"T", a.T},
                   {"dim", a.dim},
                   {"j", a.j},
                   {"t_range", a.t_range},
                   {"x_range", a.x_range},
                   {"y_range", a.y_range},
                   {"ratio_cap", a.ratio_cap}};
  rec["rows"].push_back({{"max_ratio", rep.max_ratio},
                         {"argmax", {{"t", rep.argmax_t},
                                     {"x", json_vector(rep.argmax_x)},
                                     {"y", json_vector(rep.argmax_y)}}},
                         {"samples", rep.samples},
                         {"violations", rep.violations}});
  rec["status"] = rep.violations == 0 ? "pass" : "fail";
  emit(rec);
  return rep.violations == 0 ? kExitOk : kExitCheckFailure;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
  std::string t_range = "0.5:1:2";
  std::string x_range = "0:0:1";
  std::string y_range = "0:0:1";
  int order = 0;
  int dim = 1;
  std::string oracle;
  std::string format = "csv";
};

int run_table(const TableArgs& a) {
  const ouk::GridRange tg = parse_range(a.t_range, "--t-range");
  const ouk::GridRange xg = parse_range(a.x_range, "--x-range");
  const ouk::GridRange yg = parse_range(a.y_range, "--y-range");
  const int d = a.dim;
  if (d < 1) throw std::invalid_argument("--dim must be >= 1");

  long long nx = 1, ny = 1;
  for (int i = 0; i < d; ++i) {
    nx *= xg.count;
    ny *= yg.count;
  }
  auto decode = [&](long long code, const ouk::GridRange& g, Eigen::VectorXd& v) {
    for (int i = d - 1; i >= 0; --i) {
      v[i] = g.at(static_cast<int>(code % g.count));
      code /= g.count;
    }
  };

  const bool csv = a.format == "csv";
  ordered_json rec = new_record("table");
  rec["params"] = {{"t_range", a.t_range}, {"x_range", a.x_range}, {"y_range", a.y_range},
                   {"N", a.order},         {"dim", a.dim},         {"oracle", a.oracle},
                   {"format", a.format}};
  std::ostringstream csv_out;
  if (csv) {
    csv_out << "t";
    for (int i = 1; i <= d; ++i) csv_out << ",x" << i;
    for (int i = 1; i <= d; ++i) csv_out << ",y" << i;
    csv_out << ",value";
    if (!a.oracle.empty()) csv_out << ",oracle,deviation";
    csv_out << "\n";
  }

  Eigen::VectorXd x(d), y(d);
  for (int it = 0; it < tg.count; ++it) {
    const double t = tg.at(it);
    for (long long cx = 0; cx < nx; ++cx) {
      decode(cx, xg, x);
      for (long long cy = 0; cy < ny; ++cy) {
        decode(cy, yg, y);
        ouk::KernelQuery q{t, a.order, x, y};
        const double value = ouk::derivative_kernel(q);
        double oracle_value = 0.0, deviation = 0.0;
        if (!a.oracle.empty()) {
          oracle_value = a.oracle == "spectral" ? ouk::derivative_kernel_spectral(q)
                                                : ouk::derivative_kernel_fd(q);
          deviation = ouk::relative_deviation(value, oracle_value);
        }
        if (csv) {
          csv_out << ouk::format_double(t);
          for (int i = 0; i < d; ++i) csv_out << "," << ouk::format_double(x[i]);
          for (int i = 0; i < d; ++i) csv_out << "," << ouk::format_double(y[i]);
          csv_out << "," << ouk::format_double(value);
          if (!a.oracle.empty())
            csv_out << "," << ouk::format_double(oracle_value) << ","
                    << ouk::format_double(deviation);
          csv_out << "\n";
        } else {
          ordered_json row;
          row["inputs"] = {{"t", t}, {"x", json_vector(x)}, {"y", json_vector(y)}};
          row["value"] = value;
          if (!a.oracle.empty()) {
            row["oracle_value"] = oracle_value;
            row["deviation"] = deviation;
          }
          rec["rows"].push_back(row);
        }
      }
    }
  }

  if (csv) std::cout << csv_out.str();
  else emit(rec);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral kernels of derivatives of the Ornstein-Uhlenbeck semigroup"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate the closed-form kernel at one point");
  eval->add_option("--t", eval_args.t, "time, > 0")->required();
  eval->add_option("--N", eval_args.order, "derivative order, >= 0")->required();
  eval->add_option("--dim", eval_args.dim, "dimension, >= 1")->required();
  eval->add_option("--x", eval_args.x, "comma-separated x, length dim")->required();
  eval->add_option("--y", eval_args.y, "comma-separated y, length dim")->required();
  eval->add_option("--oracle", eval_args.oracle, "also evaluate an oracle")
      ->check(CLI::IsMember({"spectral", "fd"}));
  eval->add_option("--trunc", eval_args.trunc, "spectral truncation (0 = automatic)");
  eval->add_option("--fd-step", eval_args.fd_step, "finite-difference step (0 = automatic)");
  eval->callback([&] { exit_code = run_eval(eval_args); });

  std::string suite;
  double verify_tol = -1.0;
  auto* verify = app.add_subcommand("verify", "Run an identity-verification suite");
  verify->add_option("--suite", suite, "stirling|weyl|hermite|kernels|operator|all")
      ->required()
      ->check(CLI::IsMember({"stirling", "weyl", "hermite", "kernels", "operator", "all"}));
  verify->add_option("--tol", verify_tol,
                     "tolerance override (finite-difference checks keep their floor)");
  verify->callback([&] {
    std::optional<double> tol;
    if (verify_tol > 0) tol = verify_tol;
    exit_code = run_verify(suite, tol);
  });

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Kernel-bound sweeps and the reproducing constant");
  bounds->add_flag("--calderon", bounds_args.calderon, "reproducing-formula constant mode");
  bounds->add_option("--kernel", bounds_args.kernel, "K|Ktilde")
      ->check(CLI::IsMember({"K", "Ktilde"}));
  bounds->add_option("--N", bounds_args.order, "derivative order");
  bounds->add_option("--alpha", bounds_args.alpha, "scale separation, > 1");
  bounds->add_option("--C", bounds_args.C, "constraint t|x| <= C");
  bounds->add_option("--T", bounds_args.T, "time cap");
  bounds->add_option("--dim", bounds_args.dim, "dimension");
  bounds->add_option("--j", bounds_args.j, "derivative coordinate for Ktilde (1-based)");
  bounds->add_option("--t-range", bounds_args.t_range, "lo:hi:count");
  bounds->add_option("--x-range", bounds_args.x_range, "lo:hi:count");
  bounds->add_option("--y-range", bounds_args.y_range, "lo:hi:count");
  bounds->add_option("--ratio-cap", bounds_args.ratio_cap, "pass threshold for the sup ratio");
  bounds->add_option("--n-list", bounds_args.n_list, "eigenvalues for calderon mode");
  bounds->add_option("--quad-points", bounds_args.quad_points, "points for calderon quadrature");
  bounds->add_option("--tol", bounds_args.tol, "tolerance for calderon mode");
  bounds->callback([&] { exit_code = run_bounds(bounds_args); });

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Tabulate kernel values over a grid");
  table->add_option("--t-range", table_args.t_range, "lo:hi:count")->required();
  table->add_option("--x-range", table_args.x_range, "lo:hi:count")->required();
  table->add_option("--y-range", table_args.y_range, "lo:hi:count")->required();
  table->add_option("--N", table_args.order, "derivative order");
  table->add_option("--dim", table_args.dim, "dimension");
  table->add_option("--oracle", table_args.oracle, "add oracle and deviation columns")
      ->check(CLI::IsMember({"spectral", "fd"}));
  table->add_option("--format", table_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->callback([&] { exit_code = run_table(table_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ouk::OutOfHypothesisError& e) {
    std::cerr << "out of hypothesis: " << e.what() << "\n";
    return kExitOutOfHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
