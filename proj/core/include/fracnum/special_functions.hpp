#pragma once

namespace fracnum {

// Real-argument Gamma function. Poles at x = 0, -1, -2, ...: PoleError.
// Arguments past kGammaOverflowThreshold: OverflowError.
double gamma(double x);

// ln Gamma(x) for x > 0. PoleError at x = 0.
double log_gamma(double x);

// Entire reciprocal 1/Gamma. Returns exactly 0 at the poles of Gamma; sign
// alternates on successive negative unit intervals. Never throws.
double reciprocal_gamma(double x);

// Gamma(-n)/Gamma(-N) for integers n, N >= 0: equals (-1)^(N-n) * N!/n!,
// finite even though both Gammas are individually infinite.
double gamma_ratio_neg(int n, int N);

// Digamma psi(x) = Gamma'(x)/Gamma(x). Poles as Gamma.
double digamma(double x);

// Beta function B(p, q) = Gamma(p)Gamma(q)/Gamma(p+q), p, q > 0.
double beta(double p, double q);

// Regularized incomplete Beta B(z; p, q)/B(p, q), z in [0,1], p, q > 0.
// Monotone nondecreasing in z, 0 at z = 0, 1 at z = 1.
double inc_beta_reg(double z, double p, double q);

// Euler-Mascheroni constant.
double euler_mascheroni();

// Gamma(x) for x above this threshold exceeds the double range.
inline constexpr double kGammaOverflowThreshold = 171.624;

}  // namespace fracnum
