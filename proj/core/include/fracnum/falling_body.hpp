#pragma once

#include "fracnum/differint.hpp"

namespace fracnum {

// Falling body with linear drag: velocity ratio m/b in seconds, gravity g,
// initial velocity v0, Caputo order alpha in (0, 1].
struct FallingBodyParams {
  double m_over_b;
  double g;
  double v0;
  double alpha;
};

// Velocity solution of m D^alpha v = m g - b v with v(0) = v0:
//   v(t) = g t^alpha E_{alpha,alpha+1}(-t^alpha/(m/b)) + v0 E_alpha(-t^alpha/(m/b)).
// At alpha = 1 this is the classical mg/b + (v0 - mg/b) e^(-t/(m/b)).
double falling_velocity(const FallingBodyParams& p, double t);

// d v/dt of the solution: (g - v0 b/m) t^(alpha-1) E_{alpha,alpha}(-t^alpha/(m/b)).
double falling_velocity_derivative(const FallingBodyParams& p, double t);

// Governing-equation residual per unit mass,
//   D^alpha v(t) - (g - v(t)/(m/b)),
// with the Caputo derivative evaluated by the product-integration engine over
// (0, t). A correctness probe: expected ~0. Requires alpha in (0, 1) strictly.
double falling_residual(const FallingBodyParams& p, double t,
                        const GridSpec& grid = {});

}  // namespace fracnum
