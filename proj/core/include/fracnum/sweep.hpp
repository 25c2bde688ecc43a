#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fracnum/closed_forms.hpp"
#include "fracnum/csv.hpp"
#include "fracnum/differint.hpp"
#include "fracnum/falling_body.hpp"
#include "fracnum/mittag_leffler.hpp"
#include "fracnum/tautochrone.hpp"

namespace fracnum {

enum class SweepEngine {
  kGrunwaldLetnikov,
  kRiemannLiouville,
  kCaputo,
  kClosedForm,
};

enum class FunctionTag {
  kIdentity,
  kSqrt,
  kSquare,
  kSin,
  kCos,
  kExp,
  kConstant,
};

SweepEngine parse_engine(const std::string& name);
FunctionTag parse_function(const std::string& name);
std::string function_name(FunctionTag tag);

// Library functions with analytic derivatives attached.
RealFunction make_function(FunctionTag tag);
double function_value(FunctionTag tag, double x);
double classical_derivative(FunctionTag tag, double x);

// Closed-form rule lookup for a sweep function on (a, x). Throws DomainError
// when the table has no rule for the combination.
ClosedForm make_closed_rule(FunctionTag tag, double alpha, double a,
                            OperatorKind flavor);

// Grid description driving one differintegral CSV dataset: one row per x,
// one column per alpha.
struct SweepSpec {
  std::vector<double> alpha_values;
  double x_min;
  double x_max;
  int n_samples;
  FunctionTag function;
  SweepEngine engine;
  double a;
  OperatorKind closed_flavor = OperatorKind::kRiemannLiouville;
  GridSpec grid{};
  int gl_points = 4096;
};

Dataset run_differint_sweep(const SweepSpec& spec);

// Gamma and 1/Gamma over [lo, hi] with +/-1e-3 guard bands around the poles
// (those rows are dropped).
Dataset run_gamma_sweep(double lo, double hi, int n_samples);

Dataset run_ml_sweep(const std::vector<MittagLefflerParams>& params,
                     double z_lo, double z_hi, int n_samples);

Dataset run_falling_body_sweep(double alpha, double m_over_b, double g,
                               const std::vector<double>& v0_list, double t_lo,
                               double t_hi, int n_samples);

Dataset run_tautochrone_sweep(const TautochroneSpec& spec, double y_lo,
                              double y_hi, int n_samples,
                              const GridSpec& grid = {});

// sin(x + n pi/2) for n = 0..4: the integer-derivative shift behavior.
Dataset run_sine_shift_sweep(double lo, double hi, int n_samples);

// One reproducible dataset per figure: its name, the CLI invocation that
// regenerates it, and the builder. Differintegral sweeps also carry their
// SweepSpec so the alpha-endpoint checks can recompute references.
struct FigureJob {
  std::string name;
  std::string invocation;
  std::function<Dataset()> build;
  std::optional<SweepSpec> differint_spec;
};
std::vector<FigureJob> figure_jobs();

// Initial velocities for the falling-body family: spans both sides of the
// terminal velocity g m / b = 39.24.
std::vector<double> default_initial_velocities();

// Alpha columns used by the closed-form figure sweeps (open interval (0,1)).
std::vector<double> figure_alpha_values();

}  // namespace fracnum
