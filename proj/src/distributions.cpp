#include "gmbt/distributions.hpp"

#include <cmath>

#include "gmbt/errors.hpp"
#include "gmbt/specfn.hpp"

namespace gmbt {

namespace {

void check_lognormal(const LogNormalParams& p) {
  if (!(p.theta > 0.0) || std::isnan(p.mu)) {
    throw DomainError("lognormal parameters: require finite mu and theta > 0");
  }
}

void check_gamma(const GammaParams& p) {
  if (!(p.a > 0.0) || !(p.b > 0.0)) {
    throw DomainError("gamma parameters: require a > 0 and b > 0");
  }
}

void check_rho(LogCorrelation rho) {
  if (!(rho.rho >= -1.0 && rho.rho <= 1.0)) {
    throw DomainError("log-correlation must be in [-1, 1]");
  }
}

}  // namespace

std::pair<double, double> sample_std_normal_pair(RngStream& stream) {
  for (;;) {
    const double u = 2.0 * stream.next_unit() - 1.0;
    const double v = 2.0 * stream.next_unit() - 1.0;
    const double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    return {u * f, v * f};
  }
}

double sample_std_normal(RngStream& stream) {
  return sample_std_normal_pair(stream).first;
}

std::pair<double, double> sample_correlated_lognormal_pair(const LogNormalParams& s_params,
                                                           const LogNormalParams& r_params,
                                                           LogCorrelation rho,
                                                           RngStream& stream) {
  check_lognormal(s_params);
  check_lognormal(r_params);
  check_rho(rho);
  const auto [z1, z2] = sample_std_normal_pair(stream);
  const double log_s = s_params.mu + std::sqrt(s_params.theta) * z1;
  const double log_r = r_params.mu + std::sqrt(r_params.theta) *
                                         (rho.rho * z1 + std::sqrt(1.0 - rho.rho * rho.rho) * z2);
  return {std::exp(log_s), std::exp(log_r)};
}

double sample_gamma(const GammaParams& params, RngStream& stream) {
  check_gamma(params);
  double a = params.a;
  double boost = 1.0;
  if (a < 1.0) {
    // Gamma(a) = Gamma(a+1) * U^{1/a}
    boost = std::pow(stream.next_unit(), 1.0 / a);
    a += 1.0;
  }
  const double d = a - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = sample_std_normal(stream);
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = stream.next_unit();
    if (u < 1.0 - 0.0331 * x * x * x * x) return boost * d * v / params.b;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return boost * d * v / params.b;
    }
  }
}

double gm_lognormal(const LogNormalParams& params) {
  check_lognormal(params);
  return std::exp(params.mu);
}

double gm_gamma(const GammaParams& params) {
  check_gamma(params);
  return std::exp(specfn::digamma(params.a)) / params.b;
}

double gm_gamma_ratio(const GammaParams& s, const GammaParams& r) {
  check_gamma(s);
  check_gamma(r);
  return (r.b / s.b) * std::exp(specfn::digamma(s.a) - specfn::digamma(r.a));
}

double var_log_gamma_ratio(const GammaParams& s, const GammaParams& r, LogCorrelation rho) {
  check_gamma(s);
  check_gamma(r);
  check_rho(rho);
  const double ts = specfn::trigamma(s.a);
  const double tr = specfn::trigamma(r.a);
  return ts + tr - 2.0 * rho.rho * std::sqrt(ts * tr);
}

double loggamma_pdf(double y, const GammaParams& params) {
  check_gamma(params);
  if (std::isnan(y)) throw DomainError("loggamma_pdf: NaN argument");
  const double log_pdf = params.a * std::log(params.b) - specfn::ln_gamma(params.a) +
                         params.a * y - params.b * std::exp(y);
  return std::exp(log_pdf);
}

}  // namespace gmbt
