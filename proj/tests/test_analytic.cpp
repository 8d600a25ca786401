#include <doctest.h>

#include <cmath>

#include "bvnoise/analytic.hpp"
#include "bvnoise/density.hpp"
#include "bvnoise/factorized.hpp"
#include "oracles.hpp"

using namespace bvnoise;

TEST_CASE("NoiseParams ranges") {
  for (int k = 0; k <= 1000; ++k) {
    const NoiseParams np = NoiseParams::from_p(k / 1000.0);
    CHECK(np.alpha >= 0.0);
    CHECK(np.alpha <= 1.0);
    CHECK(np.beta >= 0.0);
    CHECK(np.beta <= 0.5);
    CHECK(np.success_factor() >= 0.5);
    CHECK(np.success_factor() <= 1.0);
  }
  CHECK_THROWS_AS(NoiseParams::from_p(-1e-9), std::invalid_argument);
  CHECK_THROWS_AS(NoiseParams::from_p(1.0 + 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(NoiseParams::from_p(std::nan("")), std::invalid_argument);
}

TEST_CASE("success factor is non-increasing on a fine grid") {
  double prev = 2.0;
  for (int k = 0; k <= 1000; ++k) {
    const double p = k / 1000.0;
    const double v = NoiseParams::from_p(p).success_factor();
    if (k < 1000) {
      CHECK(v < prev);
    } else {
      CHECK(v <= prev);
    }
    CHECK(-1.5 * (1 - p) * (1 - p) <= 0.0);
    prev = v;
  }
}

TEST_CASE("success_probability examples") {
  for (std::int64_t n : {1, 7, 1000, 100000}) CHECK(success_probability(n, 0.0).probability == 1.0);
  CHECK(std::abs(success_probability(4, 1.0).probability - 1.0 / 16) <= 1e-15);
  CHECK(success_probability(4, 1.0).log2_probability == doctest::Approx(-4.0).epsilon(1e-15));
  // Brute-force 8x8 circuit oracle.
  const HiddenString s = HiddenString::all_ones(3);
  const double dense = oracle::bv_dense(s, 0.1)(7, 7).real();
  CHECK(std::abs(success_probability(3, 0.1).probability - dense) <= 1e-12);
  CHECK(std::abs(success_probability(3, 0.1).probability - 0.646092936125) <= 1e-12);
  // log2 stays finite where the probability underflows.
  const ProbabilityResult tiny = success_probability(100000, 0.5);
  CHECK(tiny.probability == 0.0);
  CHECK(std::isfinite(tiny.log2_probability));
  CHECK_THROWS_AS(success_probability(0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(success_probability(3, 2.0), std::invalid_argument);
}

TEST_CASE("analytic matches factorized up to n = 64") {
  for (std::size_t n = 1; n <= 64; ++n) {
    const HiddenString s = HiddenString::all_ones(n);
    for (int k = 0; k <= 50; ++k) {
      const double p = k / 50.0;
      const double a = success_probability(static_cast<std::int64_t>(n), p).probability;
      const double f = success_probability_factorized(s, p).probability;
      CHECK(std::abs(a - f) <= 1e-12 * a);
    }
  }
}

TEST_CASE("threshold_p examples") {
  // Frozen from the independent plain bisection in oracles.hpp.
  CHECK(std::abs(oracle::bisect_threshold(1, 2.0 / 3) - 0.30663872564936534) <= 1e-14);
  CHECK(std::abs(oracle::bisect_threshold(2, 2.0 / 3) - 0.14138262464430884) <= 1e-14);

  const ThresholdResult one = threshold_p(1);
  CHECK(std::abs(one.p_star - 0.30663872564936534) <= 1e-11);
  CHECK(std::abs(one.p_star - (1 - std::cbrt(1.0 / 3))) <= 1e-11);
  const ThresholdResult two = threshold_p(2);
  CHECK(std::abs(two.p_star - 0.14138262464430884) <= 1e-11);

  CHECK_THROWS_AS(threshold_p(3, 1.0), std::domain_error);
  CHECK_THROWS_AS(threshold_p(2, 0.25), std::domain_error);  // 2^-2 is not reachable
  CHECK_THROWS_AS(threshold_p(1, 0.4), std::domain_error);
  CHECK_NOTHROW(threshold_p(2, 0.2500001));
}

TEST_CASE("bisection agrees with the closed form and meets the residual") {
  for (std::int64_t n : {1, 2, 5, 10, 100, 1000}) {
    const ThresholdResult t = threshold_p(n);
    CHECK(std::abs(t.p_star - t.p_closed_form) <= 1e-10);
    CHECK(t.residual <= 1e-10);
    CHECK(t.iterations <= 200);
    CHECK(std::abs(t.p_star - oracle::bisect_threshold(static_cast<int>(n), 2.0 / 3)) <= 1e-10);
  }
  for (double target : {0.1, 0.5, 0.9, 0.999}) {
    const ThresholdResult t = threshold_p(20, target);
    CHECK(std::abs(t.p_star - t.p_closed_form) <= 1e-10);
    CHECK(t.residual <= 1e-10);
  }
}

TEST_CASE("small-p estimate") {
  CHECK(std::abs(threshold_small_p_approx(1) - 2.0 / 9) <= 1e-15);
  // (2/3)(1 - (2/3)^(1/100)) and the exact p*(100).
  CHECK(std::abs(threshold_small_p_approx(100) - 0.0026976280546736247) <= 1e-15);
  CHECK(std::abs(threshold_p(100).p_star - 0.002704938147993108) <= 1e-12);

  double prev_value = 1.0;
  double prev_rel = 1.0;
  for (std::int64_t n = 1; n <= 5000; n = n < 100 ? n + 1 : n + 37) {
    const double v = threshold_small_p_approx(n);
    CHECK(v < prev_value);
    prev_value = v;
    if (n >= 100) {
      const double exact = threshold_p(n).p_star;
      const double rel = std::abs(exact - v) / exact;
      CHECK(rel <= 0.01);
      CHECK(rel < prev_rel);
      prev_rel = rel;
    }
  }
  CHECK(threshold_small_p_approx(1000000000) < 1e-9);
}
