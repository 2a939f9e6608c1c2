#pragma once

// Shared helpers for the test suites: small independent oracles (series,
// closed forms, brute-force sums) deliberately written without touching the
// library's own quadrature or sampling code paths.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace testsupport {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Modified Bessel function of the first kind, order zero, by power series:
/// I0(x) = sum_k (x^2/4)^k / (k!)^2.
inline double bessel_i0(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (double(k) * double(k));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

/// log evidence of kappa*cos(theta-mu) under the uniform prior on [0,2pi):
/// (1/2pi) int e^{kappa cos} = I0(kappa).
inline double circle_von_mises_log_evidence(double kappa) {
  return std::log(bessel_i0(kappa));
}

/// log evidence of kappa*(m.n) on the unit sphere under the uniform prior:
/// (1/2) int_{-1}^{1} e^{kappa t} dt = sinh(kappa)/kappa.
inline double sphere_vmf_log_evidence(double kappa) {
  return std::log(std::sinh(kappa) / kappa);
}

/// log evidence of the one-dimensional truncated Gaussian exp(-(x-m)^2/2s^2)
/// on [lo, hi] under the uniform prior 1/(hi-lo).
inline double box_gaussian_log_evidence(double mean, double sigma, double lo,
                                        double hi) {
  const double root2 = std::numbers::sqrt2;
  const double integral = sigma * std::sqrt(std::numbers::pi / 2.0) *
                          (std::erf((hi - mean) / (sigma * root2)) -
                           std::erf((lo - mean) / (sigma * root2)));
  return std::log(integral / (hi - lo));
}

/// Shortest distance between two angles on a circle of the given width.
inline double circular_distance(double a, double b, double width = kTwoPi) {
  double d = std::abs(a - b);
  d = std::fmod(d, width);
  return std::min(d, width - d);
}

/// One-sample Kolmogorov-Smirnov statistic against U(lo, hi).
inline double ks_statistic_uniform(std::vector<double> samples, double lo,
                                   double hi) {
  std::sort(samples.begin(), samples.end());
  const double n = double(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = (samples[i] - lo) / (hi - lo);
    d = std::max(d, std::abs(cdf - double(i) / n));
    d = std::max(d, std::abs(cdf - double(i + 1) / n));
  }
  return d;
}

/// Asymptotic KS critical value at the 1% level.
inline double ks_critical_1pct(std::size_t n) {
  return 1.628 / std::sqrt(double(n));
}

/// 1% critical value of chi^2 with 19 degrees of freedom (20 bins).
constexpr double kChi2Crit19At1pct = 36.191;

}  // namespace testsupport
