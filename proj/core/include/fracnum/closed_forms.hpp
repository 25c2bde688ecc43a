#pragma once

#include <functional>

#include "fracnum/differint.hpp"
#include "fracnum/real_function.hpp"

namespace fracnum {

enum class RuleId {
  kPower,
  kShiftedMonomialRl,
  kShiftedMonomialCaputo,
  kConstantRl,
  kConstantCaputo,
  kSinMlRl,
  kSinMlCaputo,
  kCosMlCaputo,
  kExpWeyl,
  kLogRl,
  kLogIntegral,
  kIdentityRl,
  kIdentityCaputo,
};

// Evaluable result of a rule-table hit: finite on the interior of
// valid_domain, exact up to the special-function substrate.
class ClosedForm {
 public:
  ClosedForm(RuleId id, Interval valid_domain,
             std::function<double(double)> evaluate)
      : rule_id_(id), valid_domain_(valid_domain), eval_(std::move(evaluate)) {}

  double operator()(double x) const;
  RuleId rule_id() const { return rule_id_; }
  const Interval& valid_domain() const { return valid_domain_; }

 private:
  RuleId rule_id_;
  Interval valid_domain_;
  std::function<double(double)> eval_;
};

// d^alpha/dx^alpha (a x + b)^mu = a^alpha Gamma(mu+1)/Gamma(mu-alpha+1) (ax+b)^(mu-alpha),
// mu > -1. When mu - alpha + 1 hits a non-positive integer the reciprocal
// Gamma forces the identically-zero result.
ClosedForm power_rule(double mu, double alpha, double scale_a, double shift_b);

// Fractional derivative of (x - c0)^m over (a, x) with c0 <= a, m > 0,
// alpha in (0, 1); carries the regularized incomplete-Beta correction, which
// vanishes when c0 = a (collapse Gamma(m+1)/Gamma(m-alpha+1) (x-a)^(m-alpha)).
ClosedForm shifted_monomial(double m, double alpha, double a, double c0,
                            OperatorKind engine);

// Constant K over (a, x): RL gives K (x-a)^(-alpha)/Gamma(1-alpha), Caputo 0.
ClosedForm constant_rule(double K, double alpha, double a, OperatorKind engine);

// Identity function f(t) = t over (a, x), a >= 0, alpha in (0, 1):
//   RL     (x - alpha a)(x-a)^(-alpha)/Gamma(2-alpha)
//   Caputo (x-a)^(1-alpha)/Gamma(2-alpha)
ClosedForm identity_rule(double alpha, double a, OperatorKind engine);

enum class TrigKind { kSinCaputo, kSinRl, kCosCaputo };

// Mittag-Leffler closed forms for sin/cos of c(x-a) over (a, x), alpha in
// (0,1). The RL sine applies the outer d/dx term-wise on the series, which
// shifts the ML parameter down by one.
ClosedForm trig_ml(TrigKind kind, double c, double alpha, double a);

// Weyl differintegral of e^(-p x) on (x, inf), p > 0: p^alpha e^(-p x).
// Negative alpha is the Weyl integral p^(-|alpha|) e^(-p x).
ClosedForm exp_weyl(double p, double alpha);

// RL derivative of log over (0, x), alpha in (0, 1), m = 1, with the d/dx
// applied analytically: x^(-alpha)/Gamma(1-alpha) (log x - psi(1-alpha) - gamma).
ClosedForm log_rl(double alpha);

// Fractional integral of log over (0, x), alpha > 0:
//   x^alpha/Gamma(alpha+1) (log x - psi(alpha+1) + psi(1)).
ClosedForm log_integral(double alpha);

}  // namespace fracnum
