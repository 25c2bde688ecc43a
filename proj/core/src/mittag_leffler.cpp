#include "fracnum/mittag_leffler.hpp"

#include <cmath>
#include <string>

#include "fracnum/errors.hpp"
#include "fracnum/special_functions.hpp"

namespace fracnum {
namespace {

constexpr int kTermCap = 10000;
constexpr double kRelTol = 1e-16;
constexpr int kConsecutiveNeeded = 3;

void validate(const MittagLefflerParams& p) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
    throw DomainError("ml: requires alpha > 0 and beta > 0");
  }
}

// |z|^k / Gamma(alpha k + beta), switching to log space when either factor
// leaves the double range. No term recurrence: each term stands alone.
double term_magnitude(double log_abs_z, double abs_z, int k, double g_arg) {
  const double log_mag = k * log_abs_z;
  if (g_arg <= kGammaOverflowThreshold && log_mag < 700.0) {
    return std::pow(abs_z, static_cast<double>(k)) * reciprocal_gamma(g_arg);
  }
  return std::exp(log_mag - log_gamma(g_arg));
}

}  // namespace

double ml_max_argument(double alpha) {
  if (alpha >= 0.5) return 100.0;
  return std::pow(10.0, 4.0 * alpha);
}

double ml(const MittagLefflerParams& params, double z, int* terms_used) {
  validate(params);
  const double zmax = ml_max_argument(params.alpha);
  if (std::fabs(z) > zmax) {
    throw DomainError("ml: |z| = " + std::to_string(std::fabs(z)) +
                      " exceeds the supported range " + std::to_string(zmax) +
                      " for alpha = " + std::to_string(params.alpha));
  }
  if (z == 0.0) {
    if (terms_used) *terms_used = 1;
    return reciprocal_gamma(params.beta);
  }

  const double abs_z = std::fabs(z);
  const double log_abs_z = std::log(abs_z);
  const bool alternating = z < 0.0;
  auto term = [&](int k) {
    const double mag =
        term_magnitude(log_abs_z, abs_z, k, params.alpha * k + params.beta);
    return (alternating && (k & 1)) ? -mag : mag;
  };

  double sum = 0.0;
  int consecutive = 0;
  int k = 0;
  double batch[2];
  while (k < kTermCap) {
    const int step = (alternating && k + 1 < kTermCap) ? 2 : 1;
    for (int j = 0; j < step; ++j) batch[j] = term(k + j);
    // Adjacent terms paired before accumulation to curb cancellation.
    const double increment = (step == 2) ? batch[0] + batch[1] : batch[0];
    if (!std::isfinite(increment)) {
      throw ConvergenceError("ml: series term overflow at k = " +
                             std::to_string(k));
    }
    sum += increment;
    for (int j = 0; j < step; ++j) {
      if (std::fabs(batch[j]) < kRelTol * std::fabs(sum)) {
        if (++consecutive >= kConsecutiveNeeded) {
          if (terms_used) *terms_used = k + j + 1;
          return sum;
        }
      } else {
        consecutive = 0;
      }
    }
    k += step;
  }
  throw ConvergenceError("ml: term cap reached before tolerance, z = " +
                         std::to_string(z));
}

double ml_derivative(double alpha, double a, double t) {
  if (!(alpha > 0.0) || alpha > 2.0) {
    throw DomainError("ml_derivative: requires alpha in (0, 2]");
  }
  if (!(t > 0.0)) {
    throw DomainError("ml_derivative: requires t > 0");
  }
  const double ta = std::pow(t, alpha);
  return a * std::pow(t, alpha - 1.0) * ml({alpha, alpha}, a * ta);
}

}  // namespace fracnum
