#include <algorithm>
#include <cmath>
#include <vector>

#include "gmbt/errors.hpp"
#include "gmbt/specfn.hpp"
#include "gmbt/stat_tests.hpp"

// Shapiro-Wilk W test, Royston's AS R94 approximation (Applied Statistics 44,
// 1995), uncensored samples only. Weights come from the normal order-statistic
// approximation m_i = Phi^-1((i - 3/8) / (n + 1/4)) with Royston's polynomial
// corrections for the two largest weights; the p-value uses his normalizing
// transformations for n in [4, 11] and [12, 5000], and the exact arcsine form
// at n = 3.

namespace gmbt {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Royston's polynomial coefficients, low order first.
constexpr double kC1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
constexpr double kC2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
constexpr double kC3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
constexpr double kC4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
constexpr double kC5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr double kC6[3] = {-0.4803, -0.082676, 0.0030302};
constexpr double kG[2] = {-2.273, 0.459};

template <int N>
double poly(const double (&c)[N], double x) {
  double value = c[N - 1];
  for (int i = N - 2; i >= 0; --i) value = value * x + c[i];
  return value;
}

}  // namespace

ShapiroWilk::ShapiroWilk(int n) : n_(n) {
  if (n < 3 || n > 5000) {
    throw DomainError("shapiro_wilk: sample size must be in [3, 5000]");
  }
  const int n2 = n / 2;
  weights_.resize(n2);
  if (n == 3) {
    weights_[0] = std::sqrt(0.5);
    return;
  }
  std::vector<double> m(n2);
  double summ2 = 0.0;
  for (int i = 0; i < n2; ++i) {
    m[i] = specfn::normal_quantile((i + 1 - 0.375) / (n + 0.25));
    summ2 += m[i] * m[i];
  }
  summ2 *= 2.0;
  const double ssumm2 = std::sqrt(summ2);
  const double rsn = 1.0 / std::sqrt(static_cast<double>(n));
  const double a1 = poly(kC1, rsn) - m[0] / ssumm2;
  int start;
  double fac;
  if (n > 5) {
    const double a2 = poly(kC2, rsn) - m[1] / ssumm2;
    fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                    (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
    weights_[0] = a1;
    weights_[1] = a2;
    start = 2;
  } else {
    fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
    weights_[0] = a1;
    start = 1;
  }
  for (int i = start; i < n2; ++i) weights_[i] = -m[i] / fac;
}

TestReport ShapiroWilk::test(std::span<const double> values, double alpha) const {
  const int n = n_;
  if (static_cast<int>(values.size()) != n) {
    throw DomainError("shapiro_wilk: sample size does not match coefficients");
  }
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());

  const double range = x[n - 1] - x[0];
  if (!(range > 0.0)) {
    throw DegenerateError("shapiro_wilk: sample has zero range");
  }

  const int n2 = n / 2;
  // Squared correlation between the range-scaled order statistics and the
  // antisymmetric weight vector, computed as 1 - W to keep precision near 1.
  double sx = 0.0;
  for (int i = 0; i < n; ++i) sx += x[i] / range;
  sx /= n;
  double ssa = 0.0, ssx = 0.0, sax = 0.0;
  for (int i = 0; i < n; ++i) {
    double coeff = 0.0;
    if (i < n2) {
      coeff = -weights_[i];
    } else if (i >= n - n2) {
      coeff = weights_[n - 1 - i];
    }
    const double xs = x[i] / range - sx;
    ssa += coeff * coeff;
    ssx += xs * xs;
    sax += coeff * xs;
  }
  if (!(ssx > 0.0)) {
    throw DegenerateError("shapiro_wilk: sample variance is zero");
  }
  const double ssassx = std::sqrt(ssa * ssx);
  double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  if (w1 < 0.0) w1 = 0.0;
  const double w = 1.0 - w1;

  double p;
  if (n == 3) {
    p = (6.0 / kPi) * (std::asin(std::sqrt(w)) - std::asin(std::sqrt(0.75)));
    p = std::clamp(p, 0.0, 1.0);
  } else if (n <= 11) {
    const double an = n;
    const double gma = poly(kG, an);
    const double y = std::log(w1);
    if (y >= gma) {
      p = 1e-19;
    } else {
      const double y2 = -std::log(gma - y);
      const double mean = poly(kC3, an);
      const double sd = std::exp(poly(kC4, an));
      p = specfn::normal_sf((y2 - mean) / sd);
    }
  } else {
    const double u = std::log(static_cast<double>(n));
    const double y = std::log(w1);
    const double mean = poly(kC5, u);
    const double sd = std::exp(poly(kC6, u));
    p = specfn::normal_sf((y - mean) / sd);
  }

  TestReport report;
  report.method = "shapiro-wilk";
  report.statistic = w;
  report.p_value = p;
  report.alpha = alpha;
  report.reject = p <= alpha;
  return report;
}

TestReport shapiro_wilk(std::span<const double> values, double alpha) {
  return ShapiroWilk(static_cast<int>(values.size())).test(values, alpha);
}

}  // namespace gmbt
