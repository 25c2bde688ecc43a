#include "fracnum/falling_body.hpp"

#include <cmath>
#include <limits>

#include "fracnum/errors.hpp"
#include "fracnum/mittag_leffler.hpp"

namespace fracnum {
namespace {

void validate(const FallingBodyParams& p) {
  if (!(p.m_over_b > 0.0) || !(p.g > 0.0)) {
    throw DomainError("falling body: requires m/b > 0 and g > 0");
  }
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) {
    throw DomainError("falling body: requires alpha in (0, 1]");
  }
}

}  // namespace

double falling_velocity(const FallingBodyParams& p, double t) {
  validate(p);
  if (t < 0.0) {
    throw DomainError("falling_velocity: requires t >= 0");
  }
  if (t == 0.0) return p.v0;
  const double ta = std::pow(t, p.alpha);
  const double z = -ta / p.m_over_b;
  return p.g * ta * ml({p.alpha, p.alpha + 1.0}, z) + p.v0 * ml({p.alpha, 1.0}, z);
}

double falling_velocity_derivative(const FallingBodyParams& p, double t) {
  validate(p);
  const double coef = p.g - p.v0 / p.m_over_b;
  if (t <= 0.0) {
    if (coef == 0.0) return 0.0;  // started at terminal velocity
    if (p.alpha == 1.0) return coef;
    // t^(alpha-1) prefactor diverges at 0 for alpha < 1.
    return std::copysign(std::numeric_limits<double>::infinity(), coef);
  }
  const double z = -std::pow(t, p.alpha) / p.m_over_b;
  return coef * std::pow(t, p.alpha - 1.0) * ml({p.alpha, p.alpha}, z);
}

double falling_residual(const FallingBodyParams& p, double t,
                        const GridSpec& grid) {
  validate(p);
  if (!(p.alpha < 1.0)) {
    throw DomainError("falling_residual: requires alpha in (0, 1) strictly");
  }
  if (!(t > 0.0)) {
    throw DomainError("falling_residual: requires t > 0");
  }
  // v' ~ t^(alpha-1) at the origin: grade the mesh hard enough to resolve it.
  GridSpec graded = grid;
  graded.grading = std::max(grid.grading, 2.0 / p.alpha);
  RealFunction velocity([p](double u) { return falling_velocity(p, u); },
                        {[p](double u) { return falling_velocity_derivative(p, u); }});
  const double cap =
      caputo_derivative(velocity, {p.alpha, 0.0, t}, graded);
  return cap - (p.g - falling_velocity(p, t) / p.m_over_b);
}

}  // namespace fracnum
