// fracnum: deterministic CSV datasets for the fractional-calculus library.
//
// Subcommands: gamma, ml, differint, laplace-check, falling-body, tautochrone,
// figures. Exit codes: 0 success, 2 usage or domain error, 3 convergence
// failure.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fracnum/config.hpp"
#include "fracnum/csv.hpp"
#include "fracnum/differint.hpp"
#include "fracnum/errors.hpp"
#include "fracnum/laplace.hpp"
#include "fracnum/sweep.hpp"

namespace {

using fracnum::Dataset;
using fracnum::format_double;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;

std::pair<double, double> parse_pair(const std::string& text,
                                     const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw fracnum::DomainError(std::string(what) + ": expected 'lo,hi', got '" +
                               text + "'");
  }
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw fracnum::DomainError(std::string(what) + ": non-numeric in '" + text +
                               "'");
  }
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw fracnum::DomainError(std::string(what) + ": non-numeric item '" +
                                 item + "'");
    }
  }
  if (out.empty()) {
    throw fracnum::DomainError(std::string(what) + ": empty list");
  }
  return out;
}

std::vector<fracnum::MittagLefflerParams> parse_ml_params(
    const std::string& text) {
  std::vector<fracnum::MittagLefflerParams> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw fracnum::DomainError("--params: expected alpha:beta, got '" + item +
                                 "'");
    }
    try {
      out.push_back({std::stod(item.substr(0, colon)),
                     std::stod(item.substr(colon + 1))});
    } catch (const std::exception&) {
      throw fracnum::DomainError("--params: non-numeric in '" + item + "'");
    }
  }
  if (out.empty()) {
    throw fracnum::DomainError("--params: empty list");
  }
  return out;
}

void emit(const Dataset& data, const std::string& out_path) {
  for (const auto& note : data.cell_notes) {
    std::cerr << "note: " << note << "\n";
  }
  if (out_path.empty()) {
    fracnum::write_csv(data, std::cout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw fracnum::DomainError("cannot open output file '" + out_path + "'");
  }
  fracnum::write_csv(data, out);
}

struct Settings {
  fracnum::GridSpec grid;
  int gl_points = 4096;
  double laplace_horizon = 40.0;
  int laplace_nodes = 2048;
};

Settings load_settings(const std::string& config_path) {
  Settings s;
  if (config_path.empty()) return s;
  const fracnum::Config cfg = fracnum::Config::parse_file(config_path);
  s.grid.n_points = cfg.get_int("grid.n_points", s.grid.n_points);
  s.grid.refinement_levels =
      cfg.get_int("grid.refinement_levels", s.grid.refinement_levels);
  s.grid.grading = cfg.get("grid.grading", s.grid.grading);
  s.grid.tolerance = cfg.get("grid.tolerance", s.grid.tolerance);
  s.gl_points = cfg.get_int("gl.n_points", s.gl_points);
  s.laplace_horizon = cfg.get("laplace.horizon", s.laplace_horizon);
  s.laplace_nodes = cfg.get_int("laplace.n_nodes", s.laplace_nodes);
  return s;
}

// Operator-transform identity table: Caputo and RL rules on the
// f x alpha x s grid, plus the Mittag-Leffler transform pairs.
void run_laplace_check(const Settings& settings, const std::string& out_path) {
  struct NamedFn {
    std::string name;
    fracnum::RealFunction fn;
  };
  const std::vector<NamedFn> functions = {
      {"sin", fracnum::make_function(fracnum::FunctionTag::kSin)},
      {"square", fracnum::make_function(fracnum::FunctionTag::kSquare)},
      {"exp_neg",
       fracnum::RealFunction([](double t) { return std::exp(-t); },
                             {[](double t) { return -std::exp(-t); },
                              [](double t) { return std::exp(-t); }})}};
  const std::vector<double> alphas = {0.3, 0.5, 0.7};
  const std::vector<double> s_values = {1.0, 2.0, 4.0};

  fracnum::GridSpec op_grid = settings.grid;
  op_grid.n_points = std::min(op_grid.n_points, 256);
  op_grid.refinement_levels = 1;

  std::ostringstream body;
  body << "rule,function,alpha,s,lhs,rhs,rel_error\n";
  for (const char* rule : {"caputo", "rl"}) {
    const bool caputo = std::string(rule) == "caputo";
    for (const auto& nf : functions) {
      for (double alpha : alphas) {
        // The transformed operator values do not depend on s; cache them
        // across the s loop.
        auto cache = std::make_shared<std::map<double, double>>();
        const auto& f = nf.fn;
        fracnum::RealFunction op_fn([&f, alpha, caputo, op_grid,
                                     cache](double t) {
          if (t <= 0.0) return 0.0;
          const auto hit = cache->find(t);
          if (hit != cache->end()) return hit->second;
          const double v =
              caputo
                  ? fracnum::caputo_derivative(f, {alpha, 0.0, t}, op_grid)
                  : fracnum::rl_derivative(f, {alpha, 0.0, t}, op_grid);
          (*cache)[t] = v;
          return v;
        });
        for (double s : s_values) {
          const fracnum::LaplaceQuery q{s, settings.laplace_horizon,
                                        settings.laplace_nodes};
          const double lhs = fracnum::laplace_numeric(op_fn, q);
          const double rhs =
              caputo ? fracnum::caputo_transform_rhs(f, alpha, s, q)
                     : fracnum::rl_transform_rhs(f, alpha, s, q, 0.0);
          const double rel = std::fabs(lhs - rhs) /
                             std::max(1e-30, std::fabs(rhs));
          body << rule << ',' << nf.name << ',' << format_double(alpha) << ','
               << format_double(s) << ',' << format_double(lhs) << ','
               << format_double(rhs) << ',' << format_double(rel) << '\n';
        }
      }
    }
  }
  // t^(beta-1) E_{alpha,beta}(a t^alpha) transform pairs.
  struct MlCase {
    double alpha, beta, a, s, horizon;
  };
  for (const MlCase& c : {MlCase{1.0, 1.0, -1.0, 1.0, 60.0},
                          MlCase{0.5, 1.0, -1.0, 2.0, 60.0},
                          MlCase{0.5, 0.5, -1.0, 4.0, 60.0}}) {
    fracnum::RealFunction fn([c](double t) {
      if (t <= 0.0) return c.beta == 1.0 ? fracnum::ml({c.alpha, c.beta}, 0.0)
                                         : 0.0;
      return std::pow(t, c.beta - 1.0) *
             fracnum::ml({c.alpha, c.beta}, c.a * std::pow(t, c.alpha));
    });
    const fracnum::LaplaceQuery q{c.s, c.horizon, settings.laplace_nodes};
    const double lhs = fracnum::laplace_numeric(fn, q);
    const double rhs = fracnum::laplace_ml({c.alpha, c.beta}, c.a, c.s);
    const double rel = std::fabs(lhs - rhs) / std::max(1e-30, std::fabs(rhs));
    body << "ml_pair,E[alpha=" << format_double(c.alpha)
         << ";beta=" << format_double(c.beta) << "]," << format_double(c.alpha)
         << ',' << format_double(c.s) << ',' << format_double(lhs) << ','
         << format_double(rhs) << ',' << format_double(rel) << '\n';
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw fracnum::DomainError("cannot open output file '" + out_path + "'");
    }
    out << body.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracnum: fractional-calculus datasets and engines"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "key=value file overriding tolerances and default grids");

  // gamma
  auto* cmd_gamma = app.add_subcommand("gamma", "Gamma and 1/Gamma table");
  std::string gamma_range = "-5,5";
  int gamma_samples = 1001;
  std::string gamma_out;
  cmd_gamma->add_option("--range", gamma_range, "x range lo,hi");
  cmd_gamma->add_option("--samples", gamma_samples, "sample count");
  cmd_gamma->add_option("--out", gamma_out, "output path (default stdout)");

  // ml
  auto* cmd_ml = app.add_subcommand("ml", "Mittag-Leffler table");
  std::string ml_params = "1:1";
  std::string ml_range = "-5,5";
  int ml_samples = 201;
  std::string ml_out;
  cmd_ml->add_option("--params", ml_params, "alpha:beta pairs, comma separated")
      ->required();
  cmd_ml->add_option("--range", ml_range, "z range lo,hi");
  cmd_ml->add_option("--samples", ml_samples, "sample count");
  cmd_ml->add_option("--out", ml_out, "output path (default stdout)");

  // differint
  auto* cmd_diff = app.add_subcommand(
      "differint", "differintegral sweep: one row per x, one column per alpha");
  std::string di_function, di_engine = "closed", di_alpha, di_interval;
  std::string di_flavor = "rl", di_out;
  double di_xmin = std::numeric_limits<double>::quiet_NaN();
  int di_samples = 101;
  int di_grid = 0, di_gl_points = 0;
  cmd_diff->add_option("--function", di_function,
                       "identity|sqrt|square|sin|cos|exp|const")
      ->required();
  cmd_diff->add_option("--engine", di_engine, "gl|rl|caputo|closed");
  cmd_diff->add_option("--alpha", di_alpha, "alpha list, comma separated")
      ->required();
  cmd_diff->add_option("--interval", di_interval, "operator interval a,x_max")
      ->required();
  cmd_diff->add_option("--xmin", di_xmin,
                       "first sampled x (default just above a)");
  cmd_diff->add_option("--samples", di_samples, "row count");
  cmd_diff->add_option("--grid", di_grid, "quadrature n_points override");
  cmd_diff->add_option("--gl-points", di_gl_points, "GL grid size override");
  cmd_diff->add_option("--flavor", di_flavor,
                       "closed-engine operator flavor: rl|caputo");
  cmd_diff->add_option("--out", di_out, "output path (default stdout)");

  // laplace-check
  auto* cmd_lap = app.add_subcommand(
      "laplace-check", "operator-transform identity table (lhs vs rhs)");
  std::string lap_out;
  cmd_lap->add_option("--out", lap_out, "output path (default stdout)");

  // falling-body
  auto* cmd_fall = app.add_subcommand("falling-body",
                                      "drag-limited falling-body velocities");
  double fb_alpha = 1.0, fb_m_over_b = 4.0, fb_g = 9.81;
  std::string fb_v0, fb_range = "0,30", fb_out;
  int fb_samples = 121;
  cmd_fall->add_option("--alpha", fb_alpha, "Caputo order in (0,1]");
  cmd_fall->add_option("--m-over-b", fb_m_over_b, "mass/drag ratio [s]");
  cmd_fall->add_option("--g", fb_g, "gravity [m/s^2]");
  cmd_fall->add_option("--v0", fb_v0, "initial velocities, comma separated");
  cmd_fall->add_option("--range", fb_range, "time range lo,hi");
  cmd_fall->add_option("--samples", fb_samples, "row count");
  cmd_fall->add_option("--out", fb_out, "output path (default stdout)");

  // tautochrone
  auto* cmd_tau = app.add_subcommand(
      "tautochrone", "recovered arc length, closed form vs quadrature");
  double tau_T = 1.0, tau_g = 9.81, tau_ymax = 4.0;
  std::string tau_range = "0.04,4", tau_out;
  int tau_samples = 100;
  cmd_tau->add_option("--descent-time", tau_T, "descent time T [s]");
  cmd_tau->add_option("--g", tau_g, "gravity [m/s^2]");
  cmd_tau->add_option("--y-max", tau_ymax, "curve height range");
  cmd_tau->add_option("--range", tau_range, "height range lo,hi (lo > 0)");
  cmd_tau->add_option("--samples", tau_samples, "row count");
  cmd_tau->add_option("--out", tau_out, "output path (default stdout)");

  // figures
  auto* cmd_figs = app.add_subcommand(
      "figures", "emit every figure dataset and print the manifest");
  std::string figs_dir = "figures";
  cmd_figs->add_option("--out-dir", figs_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Settings settings = load_settings(config_path);

    if (cmd_gamma->parsed()) {
      const auto [lo, hi] = parse_pair(gamma_range, "--range");
      emit(fracnum::run_gamma_sweep(lo, hi, gamma_samples), gamma_out);
    } else if (cmd_ml->parsed()) {
      const auto [lo, hi] = parse_pair(ml_range, "--range");
      emit(fracnum::run_ml_sweep(parse_ml_params(ml_params), lo, hi, ml_samples),
           ml_out);
    } else if (cmd_diff->parsed()) {
      const auto [a, x_max] = parse_pair(di_interval, "--interval");
      fracnum::SweepSpec spec;
      spec.alpha_values = parse_list(di_alpha, "--alpha");
      spec.a = a;
      spec.x_max = x_max;
      spec.n_samples = di_samples;
      spec.x_min = std::isnan(di_xmin)
                       ? a + (x_max - a) / std::max(2, di_samples)
                       : di_xmin;
      spec.function = fracnum::parse_function(di_function);
      spec.engine = fracnum::parse_engine(di_engine);
      spec.closed_flavor = di_flavor == "caputo"
                               ? fracnum::OperatorKind::kCaputo
                               : fracnum::OperatorKind::kRiemannLiouville;
      spec.grid = settings.grid;
      if (di_grid > 0) spec.grid.n_points = di_grid;
      spec.gl_points = di_gl_points > 0 ? di_gl_points : settings.gl_points;
      emit(fracnum::run_differint_sweep(spec), di_out);
    } else if (cmd_lap->parsed()) {
      run_laplace_check(settings, lap_out);
    } else if (cmd_fall->parsed()) {
      const auto [lo, hi] = parse_pair(fb_range, "--range");
      const std::vector<double> v0s =
          fb_v0.empty() ? fracnum::default_initial_velocities()
                        : parse_list(fb_v0, "--v0");
      emit(fracnum::run_falling_body_sweep(fb_alpha, fb_m_over_b, fb_g, v0s, lo,
                                           hi, fb_samples),
           fb_out);
    } else if (cmd_tau->parsed()) {
      const auto [lo, hi] = parse_pair(tau_range, "--range");
      emit(fracnum::run_tautochrone_sweep({tau_T, tau_g, tau_ymax}, lo, hi,
                                          tau_samples, settings.grid),
           tau_out);
    } else if (cmd_figs->parsed()) {
      std::filesystem::create_directories(figs_dir);
      for (const auto& job : fracnum::figure_jobs()) {
        const auto path =
            std::filesystem::path(figs_dir) / (job.name + ".csv");
        const Dataset data = job.build();
        std::ofstream out(path, std::ios::binary);
        if (!out) {
          throw fracnum::DomainError("cannot open '" + path.string() + "'");
        }
        fracnum::write_csv(data, out);
        std::cout << job.name << ": " << job.invocation << " -> "
                  << path.string() << "\n";
      }
    }
  } catch (const fracnum::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
