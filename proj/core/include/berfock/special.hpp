#pragma once

namespace berfock::special {

// ln Gamma(x) for x > 0, Lanczos series.  Relative error below 1e-13 on [0.5, 1e7].
double log_gamma(double x);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double reg_inc_gamma_p(double a, double x);

// Regularized incomplete beta I_x(a, b), 0 <= x <= 1, a, b > 0.
double reg_inc_beta(double x, double a, double b);

// ln B(a, b)
double log_beta(double a, double b);

// ln C(n, k), 0 <= k <= n
double log_binomial(long n, long k);

}  // namespace berfock::special
