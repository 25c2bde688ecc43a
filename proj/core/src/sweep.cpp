#include "fracnum/sweep.hpp"

#include <cmath>
#include <limits>

#include "fracnum/errors.hpp"
#include "fracnum/special_functions.hpp"

namespace fracnum {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  return xs;
}

void note_once(Dataset& data, std::vector<bool>& seen, int column,
               const std::string& message) {
  if (!seen[column]) {
    data.cell_notes.push_back(message);
    seen[column] = true;
  }
}

}  // namespace

SweepEngine parse_engine(const std::string& name) {
  if (name == "gl") return SweepEngine::kGrunwaldLetnikov;
  if (name == "rl") return SweepEngine::kRiemannLiouville;
  if (name == "caputo") return SweepEngine::kCaputo;
  if (name == "closed") return SweepEngine::kClosedForm;
  throw DomainError("unknown engine '" + name + "' (gl|rl|caputo|closed)");
}

FunctionTag parse_function(const std::string& name) {
  if (name == "identity") return FunctionTag::kIdentity;
  if (name == "sqrt") return FunctionTag::kSqrt;
  if (name == "square") return FunctionTag::kSquare;
  if (name == "sin") return FunctionTag::kSin;
  if (name == "cos") return FunctionTag::kCos;
  if (name == "exp") return FunctionTag::kExp;
  if (name == "const") return FunctionTag::kConstant;
  throw DomainError("unknown function '" + name +
                    "' (identity|sqrt|square|sin|cos|exp|const)");
}

std::string function_name(FunctionTag tag) {
  switch (tag) {
    case FunctionTag::kIdentity: return "identity";
    case FunctionTag::kSqrt: return "sqrt";
    case FunctionTag::kSquare: return "square";
    case FunctionTag::kSin: return "sin";
    case FunctionTag::kCos: return "cos";
    case FunctionTag::kExp: return "exp";
    case FunctionTag::kConstant: return "const";
  }
  return "?";
}

RealFunction make_function(FunctionTag tag) {
  switch (tag) {
    case FunctionTag::kIdentity:
      return RealFunction([](double x) { return x; },
                          {[](double) { return 1.0; },
                           [](double) { return 0.0; }});
    case FunctionTag::kSqrt:
      return RealFunction(
          [](double x) { return std::sqrt(x); },
          {[](double x) { return 0.5 / std::sqrt(x); },
           [](double x) { return -0.25 * std::pow(x, -1.5); }},
          Interval{0.0, kInf});
    case FunctionTag::kSquare:
      return RealFunction([](double x) { return x * x; },
                          {[](double x) { return 2.0 * x; },
                           [](double) { return 2.0; }});
    case FunctionTag::kSin:
      return RealFunction([](double x) { return std::sin(x); },
                          {[](double x) { return std::cos(x); },
                           [](double x) { return -std::sin(x); }});
    case FunctionTag::kCos:
      return RealFunction([](double x) { return std::cos(x); },
                          {[](double x) { return -std::sin(x); },
                           [](double x) { return -std::cos(x); }});
    case FunctionTag::kExp:
      return RealFunction([](double x) { return std::exp(x); },
                          {[](double x) { return std::exp(x); },
                           [](double x) { return std::exp(x); }});
    case FunctionTag::kConstant:
      return RealFunction([](double) { return 1.0; },
                          {[](double) { return 0.0; },
                           [](double) { return 0.0; }});
  }
  throw DomainError("make_function: unknown tag");
}

double function_value(FunctionTag tag, double x) {
  return make_function(tag)(x);
}

double classical_derivative(FunctionTag tag, double x) {
  switch (tag) {
    case FunctionTag::kIdentity: return 1.0;
    case FunctionTag::kSqrt: return 0.5 / std::sqrt(x);
    case FunctionTag::kSquare: return 2.0 * x;
    case FunctionTag::kSin: return std::cos(x);
    case FunctionTag::kCos: return -std::sin(x);
    case FunctionTag::kExp: return std::exp(x);
    case FunctionTag::kConstant: return 0.0;
  }
  throw DomainError("classical_derivative: unknown tag");
}

ClosedForm make_closed_rule(FunctionTag tag, double alpha, double a,
                            OperatorKind flavor) {
  switch (tag) {
    case FunctionTag::kIdentity:
      return identity_rule(alpha, a, flavor);
    case FunctionTag::kSqrt:
      return shifted_monomial(0.5, alpha, a, 0.0, flavor);
    case FunctionTag::kSquare:
      return shifted_monomial(2.0, alpha, a, 0.0, flavor);
    case FunctionTag::kSin:
      if (a != 0.0) {
        throw DomainError("closed rule for sin needs interval start a = 0");
      }
      return trig_ml(flavor == OperatorKind::kRiemannLiouville
                         ? TrigKind::kSinRl
                         : TrigKind::kSinCaputo,
                     1.0, alpha, 0.0);
    case FunctionTag::kCos:
      if (a != 0.0) {
        throw DomainError("closed rule for cos needs interval start a = 0");
      }
      if (flavor != OperatorKind::kCaputo) {
        throw DomainError("closed rule for cos exists for caputo only");
      }
      return trig_ml(TrigKind::kCosCaputo, 1.0, alpha, 0.0);
    case FunctionTag::kConstant:
      return constant_rule(1.0, alpha, a, flavor);
    case FunctionTag::kExp:
      throw DomainError("no finite-interval closed rule for exp "
                        "(the Weyl rule lives on (x, inf))");
  }
  throw DomainError("make_closed_rule: unknown tag");
}

Dataset run_differint_sweep(const SweepSpec& spec) {
  if (spec.n_samples < 2) {
    throw DomainError("sweep: requires n_samples >= 2");
  }
  if (!(spec.x_min < spec.x_max)) {
    throw DomainError("sweep: requires x_min < x_max");
  }
  if (!(spec.x_min > spec.a)) {
    throw DomainError("sweep: requires x_min > a");
  }
  if (spec.alpha_values.empty()) {
    throw DomainError("sweep: requires at least one alpha");
  }

  Dataset data;
  data.header.push_back("x");
  for (double alpha : spec.alpha_values) {
    data.header.push_back("alpha=" + format_double(alpha));
  }

  const int n_alpha = static_cast<int>(spec.alpha_values.size());
  std::vector<bool> noted(n_alpha, false);
  const RealFunction f = make_function(spec.function);

  // Closed-form rules are x-independent; build them once per column.
  std::vector<std::optional<ClosedForm>> rules;
  if (spec.engine == SweepEngine::kClosedForm) {
    rules.reserve(n_alpha);
    for (int c = 0; c < n_alpha; ++c) {
      try {
        rules.push_back(make_closed_rule(spec.function, spec.alpha_values[c],
                                         spec.a, spec.closed_flavor));
      } catch (const std::exception& e) {
        rules.push_back(std::nullopt);
        note_once(data, noted, c,
                  data.header[c + 1] + ": " + e.what());
      }
    }
  }

  for (double x : linspace(spec.x_min, spec.x_max, spec.n_samples)) {
    std::vector<std::optional<double>> row;
    row.reserve(n_alpha + 1);
    row.emplace_back(x);
    for (int c = 0; c < n_alpha; ++c) {
      const double alpha = spec.alpha_values[c];
      try {
        double value;
        switch (spec.engine) {
          case SweepEngine::kGrunwaldLetnikov:
            value = gl_differint(f, {alpha, spec.a, x}, spec.gl_points);
            break;
          case SweepEngine::kRiemannLiouville:
            value = rl_derivative(f, {alpha, spec.a, x}, spec.grid);
            break;
          case SweepEngine::kCaputo:
            value = caputo_derivative(f, {alpha, spec.a, x}, spec.grid);
            break;
          case SweepEngine::kClosedForm:
            if (!rules[c]) throw DomainError("no closed rule");
            value = (*rules[c])(x);
            break;
          default:
            throw DomainError("sweep: unknown engine");
        }
        row.emplace_back(value);
      } catch (const std::exception& e) {
        row.emplace_back(std::nullopt);
        note_once(data, noted, c,
                  data.header[c + 1] + " at x=" + format_double(x) + ": " +
                      e.what());
      }
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

Dataset run_gamma_sweep(double lo, double hi, int n_samples) {
  if (n_samples < 2 || !(lo < hi)) {
    throw DomainError("gamma sweep: invalid range");
  }
  Dataset data;
  data.header = {"x", "gamma", "reciprocal_gamma"};
  for (double x : linspace(lo, hi, n_samples)) {
    // Guard band around the poles instead of inf cells.
    const double nearest = std::round(x);
    if (nearest <= 0.0 && std::fabs(x - nearest) <= 1e-3) continue;
    std::vector<std::optional<double>> row;
    row.emplace_back(x);
    try {
      row.emplace_back(gamma(x));
    } catch (const std::exception&) {
      row.emplace_back(std::nullopt);
    }
    row.emplace_back(reciprocal_gamma(x));
    data.rows.push_back(std::move(row));
  }
  return data;
}

Dataset run_ml_sweep(const std::vector<MittagLefflerParams>& params,
                     double z_lo, double z_hi, int n_samples) {
  if (params.empty()) {
    throw DomainError("ml sweep: requires at least one (alpha, beta) pair");
  }
  for (const auto& p : params) {
    if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
      throw DomainError("ml sweep: requires alpha, beta > 0");
    }
  }
  if (n_samples < 2 || !(z_lo < z_hi)) {
    throw DomainError("ml sweep: invalid range");
  }
  Dataset data;
  data.header.push_back("z");
  for (const auto& p : params) {
    data.header.push_back("E[alpha=" + format_double(p.alpha) +
                          ";beta=" + format_double(p.beta) + "]");
  }
  std::vector<bool> noted(params.size(), false);
  for (double z : linspace(z_lo, z_hi, n_samples)) {
    std::vector<std::optional<double>> row;
    row.emplace_back(z);
    for (std::size_t c = 0; c < params.size(); ++c) {
      try {
        row.emplace_back(ml(params[c], z));
      } catch (const std::exception& e) {
        row.emplace_back(std::nullopt);
        note_once(data, noted, static_cast<int>(c),
                  data.header[c + 1] + " at z=" + format_double(z) + ": " +
                      e.what());
      }
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

Dataset run_falling_body_sweep(double alpha, double m_over_b, double g,
                               const std::vector<double>& v0_list, double t_lo,
                               double t_hi, int n_samples) {
  if (v0_list.empty()) {
    throw DomainError("falling-body sweep: requires at least one v0");
  }
  if (n_samples < 2 || !(t_lo < t_hi) || t_lo < 0.0) {
    throw DomainError("falling-body sweep: invalid time range");
  }
  Dataset data;
  data.header.push_back("t");
  for (double v0 : v0_list) {
    data.header.push_back("v0=" + format_double(v0));
  }
  for (double t : linspace(t_lo, t_hi, n_samples)) {
    std::vector<std::optional<double>> row;
    row.emplace_back(t);
    for (double v0 : v0_list) {
      row.emplace_back(falling_velocity({m_over_b, g, v0, alpha}, t));
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

Dataset run_tautochrone_sweep(const TautochroneSpec& spec, double y_lo,
                              double y_hi, int n_samples,
                              const GridSpec& grid) {
  if (n_samples < 2 || !(y_lo < y_hi) || !(y_lo > 0.0)) {
    throw DomainError("tautochrone sweep: invalid height range");
  }
  Dataset data;
  data.header = {"y", "arclength_closed", "arclength_quadrature"};
  for (double y : linspace(y_lo, y_hi, n_samples)) {
    data.rows.push_back({y, tautochrone_arclength_closed(spec, y),
                         tautochrone_arclength_quadrature(spec, y, grid)});
  }
  return data;
}

Dataset run_sine_shift_sweep(double lo, double hi, int n_samples) {
  Dataset data;
  data.header = {"x", "n=0", "n=1", "n=2", "n=3", "n=4"};
  for (double x : linspace(lo, hi, n_samples)) {
    std::vector<std::optional<double>> row;
    row.emplace_back(x);
    for (int n = 0; n <= 4; ++n) {
      row.emplace_back(std::sin(x + 0.5 * n * kPi));
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

std::vector<double> default_initial_velocities() {
  return {0.0, 10.0, 20.0, 30.0, 39.24, 50.0, 60.0};
}

std::vector<double> figure_alpha_values() {
  return {0.001, 0.25, 0.5, 0.75, 0.999};
}

std::vector<FigureJob> figure_jobs() {
  const auto alphas = figure_alpha_values();
  const std::string alpha_flag = "0.001,0.25,0.5,0.75,0.999";
  std::vector<FigureJob> jobs;

  jobs.push_back({"gamma_interval",
                  "fracnum gamma --range -5,5 --samples 1001",
                  [] { return run_gamma_sweep(-5.0, 5.0, 1001); }});

  jobs.push_back(
      {"mittag_leffler",
       "fracnum ml --params 0.5:1,1:1,1.5:1,2:1,1:2 --range -5,5 --samples 201",
       [] {
         return run_ml_sweep(
             {{0.5, 1.0}, {1.0, 1.0}, {1.5, 1.0}, {2.0, 1.0}, {1.0, 2.0}},
             -5.0, 5.0, 201);
       }});

  jobs.push_back({"sine_integer_derivatives",
                  "fracnum differint --function sin (classical shifts dataset)",
                  [] { return run_sine_shift_sweep(0.0, 6.2831853071795862, 201); }});

  auto closed_spec = [alphas](FunctionTag tag, OperatorKind flavor, double a,
                              double x_min, double x_max) {
    SweepSpec spec;
    spec.alpha_values = alphas;
    spec.x_min = x_min;
    spec.x_max = x_max;
    spec.n_samples = 101;
    spec.function = tag;
    spec.engine = SweepEngine::kClosedForm;
    spec.a = a;
    spec.closed_flavor = flavor;
    return spec;
  };
  auto add_closed = [&jobs](std::string name, std::string invocation,
                            SweepSpec spec) {
    jobs.push_back({std::move(name), std::move(invocation),
                    [spec] { return run_differint_sweep(spec); }, spec});
  };

  add_closed("rl_identity_interval_1",
             "fracnum differint --function identity --engine closed "
             "--flavor rl --alpha " + alpha_flag +
             " --interval 1,3 --xmin 1.02 --samples 101",
             closed_spec(FunctionTag::kIdentity,
                         OperatorKind::kRiemannLiouville, 1.0, 1.02, 3.0));
  add_closed("caputo_identity_interval_1",
             "fracnum differint --function identity --engine closed "
             "--flavor caputo --alpha " + alpha_flag +
             " --interval 1,3 --xmin 1.02 --samples 101",
             closed_spec(FunctionTag::kIdentity, OperatorKind::kCaputo, 1.0,
                         1.02, 3.0));
  add_closed("differint_identity_interval_0",
             "fracnum differint --function identity --engine closed "
             "--flavor rl --alpha " + alpha_flag +
             " --interval 0,2 --xmin 0.02 --samples 101",
             closed_spec(FunctionTag::kIdentity,
                         OperatorKind::kRiemannLiouville, 0.0, 0.02, 2.0));
  add_closed("differint_sqrt_interval_0",
             "fracnum differint --function sqrt --engine closed "
             "--flavor rl --alpha " + alpha_flag +
             " --interval 0,2 --xmin 0.02 --samples 101",
             closed_spec(FunctionTag::kSqrt, OperatorKind::kRiemannLiouville,
                         0.0, 0.02, 2.0));
  add_closed("differint_square_interval_0",
             "fracnum differint --function square --engine closed "
             "--flavor rl --alpha " + alpha_flag +
             " --interval 0,2 --xmin 0.02 --samples 101",
             closed_spec(FunctionTag::kSquare, OperatorKind::kRiemannLiouville,
                         0.0, 0.02, 2.0));
  add_closed("rl_sin_interval_0",
             "fracnum differint --function sin --engine closed "
             "--flavor rl --alpha " + alpha_flag +
             " --interval 0,6.283185307179586 --xmin 0.06 --samples 101",
             closed_spec(FunctionTag::kSin, OperatorKind::kRiemannLiouville,
                         0.0, 0.06, 6.283185307179586));
  add_closed("caputo_sin_interval_0",
             "fracnum differint --function sin --engine closed "
             "--flavor caputo --alpha " + alpha_flag +
             " --interval 0,6.283185307179586 --xmin 0.06 --samples 101",
             closed_spec(FunctionTag::kSin, OperatorKind::kCaputo, 0.0, 0.06,
                         6.283185307179586));

  jobs.push_back(
      {"falling_body_classical",
       "fracnum falling-body --alpha 1 --m-over-b 4 --g 9.81 "
       "--v0 0,10,20,30,39.24,50,60 --range 0,30 --samples 121",
       [] {
         return run_falling_body_sweep(1.0, 4.0, 9.81,
                                       default_initial_velocities(), 0.0, 30.0,
                                       121);
       }});

  return jobs;
}

}  // namespace fracnum
