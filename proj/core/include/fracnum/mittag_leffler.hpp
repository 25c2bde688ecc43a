#pragma once

namespace fracnum {

// Parameter pair of the two-parameter Mittag-Leffler function. Both must be
// positive.
struct MittagLefflerParams {
  double alpha;
  double beta;
};

// Largest |z| accepted by ml() for a given alpha. Beyond it the alternating
// series exhausts double precision, so the argument is rejected rather than
// summed into garbage.
double ml_max_argument(double alpha);

// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta), summed directly with
// the stopping rule |t_k| < 1e-16 |S| for three consecutive terms (10 000 term
// cap). Negative z is accumulated in adjacent pairs to curb cancellation.
// terms_used, when given, receives the number of series terms consumed.
double ml(const MittagLefflerParams& params, double z, int* terms_used = nullptr);

// d/dt E_alpha(a t^alpha) = a t^{alpha-1} E_{alpha,alpha}(a t^alpha), t > 0.
double ml_derivative(double alpha, double a, double t);

}  // namespace fracnum
