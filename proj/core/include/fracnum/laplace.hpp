#pragma once

#include "fracnum/mittag_leffler.hpp"
#include "fracnum/real_function.hpp"

namespace fracnum {

// Truncated-horizon Laplace evaluation: transform variable s > 0, horizon T
// with e^(-s T) < 1e-10 required, and the total quadrature node budget.
struct LaplaceQuery {
  double s;
  double horizon = 40.0;
  int n_nodes = 2048;
};

// int_0^T e^(-s t) f(t) dt by composite 16-point Gauss-Legendre panels graded
// toward t = 0 (tolerates integrable endpoint singularities). Deterministic
// for a fixed query.
double laplace_numeric(const RealFunction& f, const LaplaceQuery& q);

// L{t^n} = Gamma(n+1)/s^(n+1), extended to real n > -1.
double laplace_monomial(double n, double s);

// L{t^(beta-1) E_{alpha,beta}(a t^alpha)} = s^(alpha-beta)/(s^alpha - a),
// requires s^alpha > a.
double laplace_ml(const MittagLefflerParams& params, double a_coef, double s);

// Right side of the Caputo transform rule for alpha in (0, 1):
//   s^alpha L{f} - s^(alpha-1) f(0).
double caputo_transform_rhs(const RealFunction& f, double alpha, double s,
                            const LaplaceQuery& q);

// Right side of the Riemann-Liouville transform rule for alpha in (0, 1):
//   s^alpha L{f} - initial_term, with the initial value D^(alpha-1)f(0)
// supplied by the caller (0 for bounded Riemann-class f).
double rl_transform_rhs(const RealFunction& f, double alpha, double s,
                        const LaplaceQuery& q, double initial_term = 0.0);

}  // namespace fracnum
