#pragma once

// Self-contained special-function kernel. All functions are pure and total on
// their stated domains; domain violations (including NaN inputs) throw
// DomainError rather than propagating NaN.

namespace gmbt::specfn {

/// log Gamma(a), a > 0.
double ln_gamma(double a);

/// psi(a) = d/da log Gamma(a), a > 0.
double digamma(double a);

/// psi_1(a) = psi'(a), a > 0.
double trigamma(double a);

/// Solves digamma(a) = y for the positive root. Newton iteration with
/// Minka's initializer; throws ConvergenceError if it fails in 100 steps.
double inverse_digamma(double y);

/// Regularized incomplete beta I_x(a, b), x in [0,1], a > 0, b > 0.
double reg_inc_beta(double x, double a, double b);

/// CDF of Student's t distribution with nu > 0 degrees of freedom.
double student_t_cdf(double t, double nu);

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal upper tail 1 - Phi(z), accurate for large z.
double normal_sf(double z);

/// Standard normal quantile, p in (0, 1).
double normal_quantile(double p);

}  // namespace gmbt::specfn
