#ifndef BVNOISE_ANALYTIC_HPP_
#define BVNOISE_ANALYTIC_HPP_

#include <cstdint>

namespace bvnoise {

inline constexpr double kDefaultTarget = 2.0 / 3.0;

/// A probability together with its base-2 logarithm. For large n the
/// probability may underflow while log2_probability stays finite.
struct ProbabilityResult {
  double probability = 0.0;
  double log2_probability = 0.0;
};

/// Depolarizing rate p and the per-qubit coefficients of the final state
///   sigma6 = alpha * rho3 + beta * I.
struct NoiseParams {
  double p = 0.0;
  double alpha = 1.0;  // (1-p)^3
  double beta = 0.0;   // p (p^2 - 3p + 3) / 2

  /// Throws std::invalid_argument unless 0 <= p <= 1.
  static NoiseParams from_p(double p);

  /// Per-qubit success factor alpha + beta.
  double success_factor() const { return alpha + beta; }
};

double alpha_of(double p);
double beta_of(double p);

/// (alpha + beta)^n, evaluated as exp(n log(alpha + beta)).
ProbabilityResult success_probability(std::int64_t n, double p);

struct ThresholdResult {
  std::int64_t n = 0;
  double target = kDefaultTarget;
  double p_star = 0.0;         // bisection root
  double p_closed_form = 0.0;  // 1 - (2 target^(1/n) - 1)^(1/3)
  double residual = 0.0;       // |(alpha + beta)^n(p_star) - target|
  int iterations = 0;
};

/// Largest p with (alpha + beta)^n >= target, by bisection on [0, 1].
/// Requires 2^-n < target < 1; throws std::domain_error otherwise.
ThresholdResult threshold_p(std::int64_t n, double target = kDefaultTarget);

/// 1 - (2 target^(1/n) - 1)^(1/3), from alpha + beta = (1 + (1-p)^3) / 2.
double threshold_closed_form(std::int64_t n, double target = kDefaultTarget);

/// First-order estimate (2/3)(1 - target^(1/n)) from alpha + beta ~ 1 - 3p/2.
double threshold_small_p_approx(std::int64_t n, double target = kDefaultTarget);

}  // namespace bvnoise

#endif  // BVNOISE_ANALYTIC_HPP_
