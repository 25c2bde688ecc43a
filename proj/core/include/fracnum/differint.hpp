#pragma once

#include <span>
#include <vector>

#include "fracnum/real_function.hpp"

namespace fracnum {

// Order and interval of a differintegral: positive alpha differentiates,
// negative alpha integrates, over (a, x) with x > a strictly.
struct DifferintOrder {
  double alpha;
  double a;
  double x;
};

// Quadrature grid for the product-integration engines. n_points doubles per
// refinement level; the disagreement of the last two levels, when it exceeds
// 10x tolerance, raises the grid-too-coarse error. grading > 1 clusters nodes
// toward the lower endpoint (for integrands singular there).
struct GridSpec {
  int n_points = 1024;
  int refinement_levels = 3;
  double grading = 1.0;
  double tolerance = 1e-5;
};

enum class OperatorKind { kRiemannLiouville, kCaputo };

// Auxiliary integer order n = floor(alpha) + 1 for alpha > 0.
int auxiliary_order(double alpha);

// Grunwald-Letnikov weights w_0 = 1, w_k = w_{k-1} (k - 1 - q)/k, equal to
// Gamma(k - q) / (Gamma(k+1) Gamma(-q)).
std::vector<double> gl_weights(double q, int count);

// Grunwald-Letnikov differintegral with N grid points:
//   [(x-a)/N]^{-q} sum_{k=0}^{N-1} w_k f(x - k (x-a)/N),  q = ord.alpha.
// q = 0 returns f(x) exactly; q < 0 integrates.
double gl_differint(const RealFunction& f, const DifferintOrder& ord, int n_points);

// Riemann-Liouville fractional integral of order alpha > 0,
//   (1/Gamma(alpha)) int_a^x (x-t)^{alpha-1} f(t) dt,
// by product integration: the singular kernel is integrated exactly against a
// piecewise-linear interpolant of f.
double frac_integral(const RealFunction& f, double alpha, double a, double x,
                     const GridSpec& grid = {});

// Right-sided fractional integral over (x, b), mirrored onto the left-sided
// engine through the reflection t -> x + b - t.
double frac_integral_from_right(const RealFunction& f, double alpha, double x,
                                double b, const GridSpec& grid = {});

// Riemann-Liouville derivative of non-integer order alpha > 0 via the sum
// representation: the f^(k)(a) boundary terms plus the fractional integral of
// f^(n). Integer alpha is rejected (use classical differentiation).
double rl_derivative(const RealFunction& f, const DifferintOrder& ord,
                     const GridSpec& grid = {});

// Caputo derivative of non-integer order alpha > 0:
//   (1/Gamma(n-alpha)) int_a^x (x-u)^{n-alpha-1} f^(n)(u) du.
double caputo_derivative(const RealFunction& f, const DifferintOrder& ord,
                         const GridSpec& grid = {});

struct TaylorResult {
  double value;
  double last_term;  // magnitude of the final series term included
};

// Series differintegral from the derivatives of f at a (orders 0..K, K >= 4),
// alpha in (0, 1). The RL engine applies the outer d/dx term-wise; terms
// growing for five consecutive k raise the divergence error.
TaylorResult taylor_differint(std::span<const double> derivs_at_a, double alpha,
                              double a, double x, OperatorKind engine);

struct SemigroupPair {
  double composed;  // I^alpha applied to I^beta f
  double direct;    // I^(alpha+beta) f
};

// Both routes of the semigroup law I^a I^b = I^(a+b), returned for assertion.
SemigroupPair semigroup_check(const RealFunction& f, double alpha, double beta,
                              double a, double x, const GridSpec& grid = {});

}  // namespace fracnum
