#include "bvnoise/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bvnoise {

namespace {

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("error probability must lie in [0, 1], got " + std::to_string(p));
  }
}

void check_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
}

double success_value(std::int64_t n, double p) {
  return std::exp(static_cast<double>(n) * std::log(NoiseParams::from_p(p).success_factor()));
}

constexpr double kBisectionWidth = 1e-12;
constexpr double kResidualTolerance = 1e-10;
constexpr int kMaxBisectionSteps = 200;

}  // namespace

double alpha_of(double p) {
  const double q = 1.0 - p;
  return q * q * q;
}

double beta_of(double p) { return p * (p * p - 3.0 * p + 3.0) / 2.0; }

NoiseParams NoiseParams::from_p(double p) {
  check_p(p);
  return NoiseParams{p, alpha_of(p), beta_of(p)};
}

ProbabilityResult success_probability(std::int64_t n, double p) {
  check_n(n);
  const double factor = NoiseParams::from_p(p).success_factor();
  const double log_factor = std::log(factor);
  const double nd = static_cast<double>(n);
  return {std::exp(nd * log_factor), nd * log_factor / std::numbers::ln2};
}

double threshold_closed_form(std::int64_t n, double target) {
  check_n(n);
  const double root = std::pow(target, 1.0 / static_cast<double>(n));
  return 1.0 - std::cbrt(2.0 * root - 1.0);
}

ThresholdResult threshold_p(std::int64_t n, double target) {
  check_n(n);
  const double floor_value = std::exp2(-static_cast<double>(n));
  if (!(target > floor_value && target < 1.0)) {
    throw std::domain_error("target " + std::to_string(target) + " is not achievable for n = " +
                            std::to_string(n) + "; need 2^-n < target < 1");
  }

  // f(p) = (alpha + beta)^n - target is strictly decreasing, f(0) > 0 > f(1).
  double lo = 0.0;
  double hi = 1.0;
  double mid = 0.5;
  double residual = 0.0;
  int it = 0;
  while (it < kMaxBisectionSteps) {
    ++it;
    mid = 0.5 * (lo + hi);
    const double f = success_value(n, mid) - target;
    residual = std::abs(f);
    if (f > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    // Width and residual must both hold; stop early once the interval stops shrinking.
    const bool narrow = hi - lo <= kBisectionWidth;
    if ((narrow && residual <= kResidualTolerance) || !(lo < 0.5 * (lo + hi) && 0.5 * (lo + hi) < hi)) {
      break;
    }
  }

  ThresholdResult result;
  result.n = n;
  result.target = target;
  result.p_star = mid;
  result.p_closed_form = threshold_closed_form(n, target);
  result.residual = residual;
  result.iterations = it;
  return result;
}

double threshold_small_p_approx(std::int64_t n, double target) {
  check_n(n);
  return (2.0 / 3.0) * (1.0 - std::pow(target, 1.0 / static_cast<double>(n)));
}

}  // namespace bvnoise
