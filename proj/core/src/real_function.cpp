#include "fracnum/real_function.hpp"

#include <cmath>
#include <string>

#include "fracnum/errors.hpp"

namespace fracnum {

double RealFunction::operator()(double x) const {
  if (!domain_.contains(x)) {
    throw DomainError("RealFunction: x = " + std::to_string(x) +
                      " outside the declared domain");
  }
  return eval_(x);
}

double RealFunction::derivative(int order, double x, double fd_step) const {
  if (order == 0) return eval_(x);
  if (has_analytic_derivative(order)) return derivatives_[order - 1](x);
  return finite_difference(order, x, fd_step);
}

// Central difference of order n with spacing h: the stencil spans
// x +/- n h / 2 and is exact for polynomials of degree n + 1.
double RealFunction::finite_difference(int order, double x, double h) const {
  double binom = 1.0;
  double acc = 0.0;
  for (int j = 0; j <= order; ++j) {
    const double node = x + (0.5 * order - j) * h;
    acc += ((j & 1) ? -binom : binom) * eval_(node);
    binom = binom * (order - j) / (j + 1);
  }
  return acc / std::pow(h, order);
}

}  // namespace fracnum
