#pragma once

#include <utility>

#include "gmbt/rng.hpp"

namespace gmbt {

/// Lognormal parameters: mu is the mean of the log, theta its variance.
struct LogNormalParams {
  double mu = 0.0;
  double theta = 1.0;
};

/// Gamma parameters in the rate parametrization: mean a/b, E[log Z] = psi(a) - log b.
struct GammaParams {
  double a = 1.0;  // shape
  double b = 1.0;  // rate
};

/// Linear correlation of the logs of a positive pair, in [-1, 1].
struct LogCorrelation {
  double rho = 0.0;
};

/// One standard normal variate (Marsaglia polar method; the spare variate is
/// discarded so the draw is a pure function of the stream position).
double sample_std_normal(RngStream& stream);

/// Both variates of one polar round.
std::pair<double, double> sample_std_normal_pair(RngStream& stream);

/// A pair (S, R) with log S ~ Normal(mu_S, theta_S), log R ~ Normal(mu_R, theta_R)
/// and correlation rho between the logs.
std::pair<double, double> sample_correlated_lognormal_pair(const LogNormalParams& s_params,
                                                           const LogNormalParams& r_params,
                                                           LogCorrelation rho,
                                                           RngStream& stream);

/// One Gamma(a, b) variate, Marsaglia-Tsang squeeze method.
double sample_gamma(const GammaParams& params, RngStream& stream);

/// Geometric mean exp(E[log X]) of a lognormal: e^mu.
double gm_lognormal(const LogNormalParams& params);

/// Geometric mean of a gamma variate: e^psi(a) / b.
double gm_gamma(const GammaParams& params);

/// Geometric mean of the ratio S/R of two gamma variates:
/// (b_R / b_S) * exp(psi(a_S) - psi(a_R)). Holds regardless of dependence.
double gm_gamma_ratio(const GammaParams& s, const GammaParams& r);

/// Variance of log(S/R) for gamma S, R with log-correlation rho:
/// psi1(a_S) + psi1(a_R) - 2 rho sqrt(psi1(a_S) psi1(a_R)).
/// Does not depend on the rates.
double var_log_gamma_ratio(const GammaParams& s, const GammaParams& r, LogCorrelation rho);

/// Density of Y = log Z for Z ~ Gamma(a, b): (b^a / Gamma(a)) exp(a y - b e^y).
double loggamma_pdf(double y, const GammaParams& params);

}  // namespace gmbt
