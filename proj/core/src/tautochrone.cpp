#include "fracnum/tautochrone.hpp"

#include <cmath>

#include "fracnum/errors.hpp"
#include "fracnum/special_functions.hpp"

namespace fracnum {
namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const TautochroneSpec& spec) {
  if (!(spec.descent_time > 0.0) || !(spec.g > 0.0) || !(spec.y_max > 0.0)) {
    throw DomainError("tautochrone: requires T, g, y_max > 0");
  }
}

}  // namespace

double tautochrone_phi(const TautochroneSpec& spec) {
  validate(spec);
  return std::sqrt(2.0 * spec.g) * spec.descent_time;
}

double tautochrone_arclength_closed(const TautochroneSpec& spec, double y) {
  validate(spec);
  if (y < 0.0) {
    throw DomainError("tautochrone_arclength: requires y >= 0");
  }
  return 2.0 * tautochrone_phi(spec) * std::sqrt(y) / kPi;
}

double tautochrone_arclength_quadrature(const TautochroneSpec& spec, double y,
                                        const GridSpec& grid) {
  validate(spec);
  if (!(y > 0.0)) {
    throw DomainError("tautochrone_arclength_quadrature: requires y > 0");
  }
  // (1/pi) int_0^y (y-y0)^(-1/2) phi dy0 = Gamma(1/2) I^(1/2) phi / pi.
  const double phi = tautochrone_phi(spec);
  RealFunction constant_phi([phi](double) { return phi; });
  return gamma(0.5) * frac_integral(constant_phi, 0.5, 0.0, y, grid) / kPi;
}

double abel_forward(const RealFunction& s_derivative, double y0, double n,
                    const GridSpec& grid) {
  if (!(n > 0.0 && n < 1.0)) {
    throw DomainError("abel_forward: requires n in (0, 1)");
  }
  if (!(y0 > 0.0)) {
    throw DomainError("abel_forward: requires y0 > 0");
  }
  // int_0^y0 (y0-y)^(-n) S'(y) dy = Gamma(1-n) I^(1-n) S' at y0.
  return gamma(1.0 - n) * frac_integral(s_derivative, 1.0 - n, 0.0, y0, grid);
}

}  // namespace fracnum
