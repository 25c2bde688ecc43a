#include "fracnum/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fracnum/errors.hpp"
#include "fracnum/mittag_leffler.hpp"
#include "fracnum/special_functions.hpp"

namespace fracnum {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEulerGammaConst = 0.57721566490153286060651209;

void require_unit_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(std::string(who) + ": requires alpha in (0, 1)");
  }
}

}  // namespace

double ClosedForm::operator()(double x) const {
  if (!valid_domain_.contains(x)) {
    throw DomainError("ClosedForm: x = " + std::to_string(x) +
                      " outside the rule's valid domain");
  }
  return eval_(x);
}

ClosedForm power_rule(double mu, double alpha, double scale_a, double shift_b) {
  if (!(mu > -1.0)) {
    throw DomainError("power_rule: requires mu > -1");
  }
  if (scale_a == 0.0) {
    throw DomainError("power_rule: scale must be nonzero (use constant_rule)");
  }
  // Valid where ax + b > 0.
  Interval domain;
  if (scale_a > 0.0) {
    domain = {-shift_b / scale_a, kInf};
  } else {
    domain = {-kInf, -shift_b / scale_a};
  }
  const double coef =
      std::pow(scale_a, alpha) * gamma(mu + 1.0) * reciprocal_gamma(mu - alpha + 1.0);
  const double expo = mu - alpha;
  return ClosedForm(RuleId::kPower, domain, [=](double x) {
    return coef * std::pow(scale_a * x + shift_b, expo);
  });
}

ClosedForm shifted_monomial(double m, double alpha, double a, double c0,
                            OperatorKind engine) {
  require_unit_alpha(alpha, "shifted_monomial");
  if (!(m > 0.0)) {
    throw DomainError("shifted_monomial: requires m > 0");
  }
  if (!(c0 <= a)) {
    throw DomainError("shifted_monomial: requires c0 <= a");
  }
  const double gm1 = gamma(m + 1.0);
  const bool rl = engine == OperatorKind::kRiemannLiouville;
  const RuleId id = rl ? RuleId::kShiftedMonomialRl : RuleId::kShiftedMonomialCaputo;
  auto eval = [=](double x) {
    const double w = x - c0;
    const double z = (a - c0) / w;  // in [0, 1) for x > a
    if (!(z >= 0.0 && z < 1.0)) {
      throw DomainError("shifted_monomial: (a-c0)/(x-c0) outside [0, 1)");
    }
    if (rl) {
      // d/dx applied analytically to [1 - I_z(m+1, 1-alpha)] w^(m-alpha+1).
      const double head = gm1 * reciprocal_gamma(m - alpha + 1.0) *
                          std::pow(w, m - alpha) *
                          (1.0 - inc_beta_reg(z, m + 1.0, 1.0 - alpha));
      double correction = 0.0;
      if (z > 0.0) {
        correction = gm1 * reciprocal_gamma(m - alpha + 2.0) *
                     std::pow(w, m - alpha) * std::pow(z, m + 1.0) *
                     std::pow(1.0 - z, -alpha) / beta(m + 1.0, 1.0 - alpha);
      }
      return head + correction;
    }
    return gm1 * reciprocal_gamma(m - alpha + 1.0) *
           (1.0 - inc_beta_reg(z, m, 1.0 - alpha)) * std::pow(w, m - alpha);
  };
  return ClosedForm(id, {a, kInf}, eval);
}

ClosedForm constant_rule(double K, double alpha, double a, OperatorKind engine) {
  require_unit_alpha(alpha, "constant_rule");
  if (engine == OperatorKind::kCaputo) {
    return ClosedForm(RuleId::kConstantCaputo, {a, kInf},
                      [](double) { return 0.0; });
  }
  const double coef = K * reciprocal_gamma(1.0 - alpha);
  return ClosedForm(RuleId::kConstantRl, {a, kInf}, [=](double x) {
    return coef * std::pow(x - a, -alpha);
  });
}

ClosedForm identity_rule(double alpha, double a, OperatorKind engine) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("identity_rule: requires alpha in [0, 1]");
  }
  if (a < 0.0) {
    throw DomainError("identity_rule: requires a >= 0");
  }
  const double rg = reciprocal_gamma(2.0 - alpha);
  if (engine == OperatorKind::kRiemannLiouville) {
    return ClosedForm(RuleId::kIdentityRl, {a, kInf}, [=](double x) {
      return rg * std::pow(x - a, -alpha) * (x - alpha * a);
    });
  }
  return ClosedForm(RuleId::kIdentityCaputo, {a, kInf}, [=](double x) {
    return rg * std::pow(x - a, 1.0 - alpha);
  });
}

ClosedForm trig_ml(TrigKind kind, double c, double alpha, double a) {
  require_unit_alpha(alpha, "trig_ml");
  if (c == 0.0) {
    throw DomainError("trig_ml: requires c != 0");
  }
  switch (kind) {
    case TrigKind::kSinCaputo:
      return ClosedForm(RuleId::kSinMlCaputo, {a, kInf}, [=](double x) {
        const double w = x - a;
        return c * std::pow(w, 1.0 - alpha) *
               ml({2.0, 2.0 - alpha}, -c * c * w * w);
      });
    case TrigKind::kSinRl:
      // c d/dx { w^(2-alpha) E_{2,3-alpha}(-c^2 w^2) }, term-wise:
      // the derivative lowers the second ML parameter by one.
      return ClosedForm(RuleId::kSinMlRl, {a, kInf}, [=](double x) {
        const double w = x - a;
        return c * std::pow(w, 1.0 - alpha) *
               ml({2.0, 2.0 - alpha}, -c * c * w * w);
      });
    case TrigKind::kCosCaputo:
      return ClosedForm(RuleId::kCosMlCaputo, {a, kInf}, [=](double x) {
        const double w = x - a;
        return -c * c * std::pow(w, 2.0 - alpha) *
               ml({2.0, 3.0 - alpha}, -c * c * w * w);
      });
  }
  throw DomainError("trig_ml: unknown kind");
}

ClosedForm exp_weyl(double p, double alpha) {
  if (!(p > 0.0)) {
    throw DomainError("exp_weyl: requires p > 0");
  }
  const double coef = std::pow(p, alpha);
  return ClosedForm(RuleId::kExpWeyl, {-kInf, kInf},
                    [=](double x) { return coef * std::exp(-p * x); });
}

ClosedForm log_rl(double alpha) {
  require_unit_alpha(alpha, "log_rl");
  const double rg = reciprocal_gamma(1.0 - alpha);
  const double shift = digamma(1.0 - alpha) + kEulerGammaConst;
  return ClosedForm(RuleId::kLogRl, {0.0, kInf}, [=](double x) {
    if (!(x > 0.0)) throw DomainError("log_rl: requires x > 0");
    return rg * std::pow(x, -alpha) * (std::log(x) - shift);
  });
}

ClosedForm log_integral(double alpha) {
  if (!(alpha > 0.0)) {
    throw DomainError("log_integral: requires alpha > 0");
  }
  const double rg = reciprocal_gamma(alpha + 1.0);
  const double shift = digamma(alpha + 1.0) + kEulerGammaConst;  // -psi(1) = gamma
  return ClosedForm(RuleId::kLogIntegral, {0.0, kInf}, [=](double x) {
    if (!(x > 0.0)) throw DomainError("log_integral: requires x > 0");
    return rg * std::pow(x, alpha) * (std::log(x) - shift);
  });
}

}  // namespace fracnum
