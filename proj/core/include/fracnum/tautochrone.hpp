#pragma once

#include "fracnum/differint.hpp"

namespace fracnum {

// Tautochrone data: the (constant) descent time, gravity, and the height
// range the curve is evaluated over.
struct TautochroneSpec {
  double descent_time;
  double g;
  double y_max;
};

// The constant phi = sqrt(2 g) T appearing in the descent-time integral.
double tautochrone_phi(const TautochroneSpec& spec);

// Recovered arc length S(y) = (1/pi) int_0^y (y - y0)^(-1/2) phi dy0, in
// closed form: 2 sqrt(2 g) T sqrt(y) / pi.
double tautochrone_arclength_closed(const TautochroneSpec& spec, double y);

// The same arc length by singular product-integration quadrature.
double tautochrone_arclength_quadrature(const TautochroneSpec& spec, double y,
                                        const GridSpec& grid = {});

// Generalized forward Abel integral int_0^y0 (y0 - y)^(-n) S'(y) dy,
// n in (0, 1), by product integration. For the tautochrone S this recovers
// the constant phi at every starting height y0.
double abel_forward(const RealFunction& s_derivative, double y0, double n,
                    const GridSpec& grid = {});

}  // namespace fracnum
