#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infdiv/inversion_driver.hpp"
#include "infdiv/model_text.hpp"

namespace infdiv {

struct CliRequest {
  std::string dist_spec;
  std::string func = "pdf";
  std::string method = "polynomial";
  double tol = 1e-6;
  std::string precision = "double";
  std::vector<double> xs;  // explicit points; empty -> range below
  double x_min = 0;
  double x_max = 0;
  int steps = 0;
  std::string spacing = "linear";
  std::string output = "csv";
  std::string output_path;
};

namespace cli_detail {

struct Record {
  double x = 0;
  double value = 0;
  double abs_err = 0;
  double rel_err = 0;
  int points_used = 0;
  bool converged = false;
  bool clamped = false;
};

inline std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// JSON needs non-finite values quoted; the numeric text itself is identical to
// the CSV rendering.
inline std::string fmt17_json(double v) {
  std::string s = fmt17(v);
  if (std::isfinite(v)) return s;
  return "\"" + s + "\"";
}

inline void emit_csv(const std::vector<Record>& records, std::ostream& os) {
  os << "x,value,abs_err,rel_err,points_used,converged,clamped\n";
  for (const auto& r : records) {
    os << fmt17(r.x) << ',' << fmt17(r.value) << ',' << fmt17(r.abs_err) << ','
       << fmt17(r.rel_err) << ',' << r.points_used << ',' << (r.converged ? "true" : "false")
       << ',' << (r.clamped ? "true" : "false") << '\n';
  }
}

inline void emit_json(const std::vector<Record>& records, std::ostream& os) {
  os << "[\n";
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << "  {\"x\": " << fmt17_json(r.x) << ", \"value\": " << fmt17_json(r.value)
       << ", \"abs_err\": " << fmt17_json(r.abs_err) << ", \"rel_err\": " << fmt17_json(r.rel_err)
       << ", \"points_used\": " << r.points_used
       << ", \"converged\": " << (r.converged ? "true" : "false")
       << ", \"clamped\": " << (r.clamped ? "true" : "false") << "}"
       << (i + 1 < records.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

inline std::vector<double> build_grid(const CliRequest& req) {
  if (!req.xs.empty()) {
    std::vector<double> xs = req.xs;
    std::sort(xs.begin(), xs.end());
    for (double x : xs)
      if (!(x > 0)) throw std::invalid_argument("evaluation points must be positive");
    return xs;
  }
  if (req.steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (!(req.x_min > 0)) throw std::invalid_argument("x-min must be positive");
  if (req.steps > 1 && !(req.x_max > req.x_min))
    throw std::invalid_argument("x-max must exceed x-min");
  std::vector<double> xs(req.steps);
  if (req.steps == 1) {
    xs[0] = req.x_min;
  } else if (req.spacing == "log") {
    double ratio = std::log(req.x_max / req.x_min) / (req.steps - 1);
    for (int i = 0; i < req.steps; ++i) xs[i] = req.x_min * std::exp(ratio * i);
    xs.back() = req.x_max;
  } else {
    double step = (req.x_max - req.x_min) / (req.steps - 1);
    for (int i = 0; i < req.steps; ++i) xs[i] = req.x_min + step * i;
    xs.back() = req.x_max;
  }
  return xs;
}

template <typename Real>
int evaluate_request(const LaplaceExponentModel& model, const std::vector<double>& xs,
                     const CliRequest& req, std::vector<Record>& records, std::ostream& err) {
  InversionConfig<Real> cfg = default_inversion_config<Real>();
  cfg.tolerance = Real(req.tol);
  cfg.method = req.method == "rational" ? ExtrapolationMethod::Rational
                                        : ExtrapolationMethod::Polynomial;
  cfg.target = req.func == "cdf" ? InversionTarget::Cdf : InversionTarget::Pdf;
  std::vector<Real> points(xs.begin(), xs.end());
  std::vector<GridPoint<Real>> grid = evaluate_grid(model, points, cfg);
  bool any_error = false, all_converged = true;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!grid[i].result) {
      any_error = true;
      err << "error at x=" << xs[i] << ": " << grid[i].error << '\n';
      continue;
    }
    const auto& r = *grid[i].result;
    Record rec;
    rec.x = xs[i];
    rec.value = to_double(r.value);
    rec.abs_err = to_double(r.abs_error_estimate);
    rec.rel_err = to_double(r.rel_error_estimate);
    rec.points_used = r.points_used;
    rec.converged = r.converged;
    rec.clamped = r.clamped;
    records.push_back(rec);
    all_converged = all_converged && r.converged;
  }
  if (any_error) return 2;
  return all_converged ? 0 : 3;
}

}  // namespace cli_detail

// Parses flags, runs the inversion over the requested grid, and emits CSV or
// JSON records ordered by x.  Exit status: 0 all converged, 1 argument errors,
// 2 model or quadrature errors, 3 any non-converged point (records still
// emitted).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliRequest req;
  CLI::App app{"PDF/CDF evaluation of non-negative infinitely divisible distributions\n"
               "from the Laplace exponent, via extrapolated Post-Widder inversion"};
  app.add_option("--dist", req.dist_spec,
                 "distribution spec, e.g. chi2:weights=1 | inverse-gaussian | "
                 "alpha-stable:alpha=0.5,c=1 | stable-mix:alphas=0.4,0.8;weights=0.3,0.7 | "
                 "uniform-mix | ou-poisson:eta=1 | ou-gamma:eta=1,kappa=1,theta=1 | "
                 "scaled(C;SPEC) | sum(SPEC;SPEC;...)")
      ->required();
  app.add_option("--func", req.func, "pdf or cdf (default pdf)")
      ->check(CLI::IsMember({"pdf", "cdf"}));
  app.add_option("--method", req.method, "polynomial or rational extrapolation")
      ->check(CLI::IsMember({"polynomial", "rational"}));
  app.add_option("--tol", req.tol, "relative tolerance (default 1e-6)");
  app.add_option("--precision", req.precision, "double or extended")
      ->check(CLI::IsMember({"double", "extended"}));
  auto* x_opt = app.add_option("--x", req.xs, "explicit evaluation points");
  auto* xmin_opt = app.add_option("--x-min", req.x_min, "grid start (positive)");
  app.add_option("--x-max", req.x_max, "grid end");
  app.add_option("--steps", req.steps, "number of grid points");
  app.add_option("--spacing", req.spacing, "linear or log grid spacing")
      ->check(CLI::IsMember({"linear", "log"}));
  app.add_option("--output", req.output, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", req.output_path, "write records to this file instead of stdout");
  x_opt->excludes(xmin_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  if (!(req.tol > 0)) {
    err << "tol must be positive\n";
    return 1;
  }
  if (req.xs.empty() && req.steps == 0) {
    err << "give either --x or --x-min/--x-max/--steps\n";
    return 1;
  }

  LaplaceExponentModel model{InverseGaussian{}};
  std::vector<double> xs;
  try {
    model = parse_model(req.dist_spec);
    xs = cli_detail::build_grid(req);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }

  bool extended = req.precision == "extended";
  if (!extended && req.tol < 1e-10) {
    err << "tol below 1e-10 needs the extended backend; promoting precision to extended\n";
    extended = true;
  }

  std::vector<cli_detail::Record> records;
  int status = 0;
  try {
    status = extended ? cli_detail::evaluate_request<Extended>(model, xs, req, records, err)
                      : cli_detail::evaluate_request<double>(model, xs, req, records, err);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!req.output_path.empty()) {
    file.open(req.output_path);
    if (!file) {
      err << "cannot open output file: " << req.output_path << '\n';
      return 1;
    }
    sink = &file;
  }
  if (req.output == "json")
    cli_detail::emit_json(records, *sink);
  else
    cli_detail::emit_csv(records, *sink);
  return status;
}

}  // namespace infdiv
