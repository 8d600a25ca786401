#include <doctest.h>

#include <cmath>

#include "bvnoise/analytic.hpp"
#include "bvnoise/matrix.hpp"
#include "bvnoise/monte_carlo.hpp"
#include "bvnoise/rng.hpp"
#include "oracles.hpp"

using namespace bvnoise;

TEST_CASE("counter rng is reproducible and order independent") {
  CounterRng a = CounterRng::for_stream(5, 9);
  CounterRng b = CounterRng::for_stream(5, 9);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(CounterRng::for_stream(5, 9).key() != CounterRng::for_stream(5, 10).key());
  // splitmix64 reference: seed 0 produces 0xe220a8397b1dcdaf first.
  CHECK(CounterRng(0).next_u64() == 0xe220a8397b1dcdafULL);
  CounterRng u(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("pauli partition of a single draw") {
  const double p = 0.4;  // keep below 0.7, then X/Y/Z intervals of width 0.1
  CHECK(sample_pauli(0.0, p) == Pauli::I);
  CHECK(sample_pauli(0.6999, p) == Pauli::I);
  CHECK(sample_pauli(0.7001, p) == Pauli::X);
  CHECK(sample_pauli(0.8001, p) == Pauli::Y);
  CHECK(sample_pauli(0.9001, p) == Pauli::Z);
  CHECK(sample_pauli(0.999999, 0.0) == Pauli::I);
  CHECK(sample_pauli(0.0, 1.0) == Pauli::I);
  CHECK(sample_pauli(0.2501, 1.0) == Pauli::X);
}

TEST_CASE("twirl average equals the depolarizing channel") {
  CounterRng rng(31);
  const ComplexMatrix paulis[] = {gates::identity2(), gates::pauli_x(), gates::pauli_y(), gates::pauli_z()};
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix rho = oracle::random_density(2, rng);
    const double p = rng.uniform();
    ComplexMatrix avg = rho * (1 - 0.75 * p);
    for (int k = 1; k < 4; ++k) avg += matmul(matmul(paulis[k], rho), paulis[k]) * (0.25 * p);
    ComplexMatrix expected = rho * (1 - p);
    expected(0, 0) += p / 2;
    expected(1, 1) += p / 2;
    CHECK(max_abs_diff(avg, expected) <= 1e-12);
  }
}

TEST_CASE("sample_run examples") {
  const HiddenString s = HiddenString::parse("10110");
  for (std::uint64_t shot = 0; shot < 200; ++shot) {
    CounterRng rng = CounterRng::for_stream(3, shot);
    CHECK(sample_run(s, 0.0, rng) == s);
    CHECK(rng.draws() == 4 * s.size());
  }

  SUBCASE("p = 1, n = 1 is uniform (chi-square, 1 dof, 99%)") {
    const HiddenString one = HiddenString::parse("1");
    const int shots = 100000;
    int ones = 0;
    for (int k = 0; k < shots; ++k) {
      CounterRng rng = CounterRng::for_stream(2024, static_cast<std::uint64_t>(k));
      ones += sample_run(one, 1.0, rng).bit(1);
    }
    const double expected = shots / 2.0;
    const double chi2 = 2 * (ones - expected) * (ones - expected) / expected;
    CHECK(chi2 < 6.635);
  }
}

TEST_CASE("estimate_success examples") {
  const McEstimate noiseless = estimate_success({HiddenString::parse("1"), 0.0, 1, 7});
  CHECK(noiseless.estimate == 1.0);
  CHECK(noiseless.stderr_ == 0.0);

  SUBCASE("n = 1, s = 1, p = 0.1 converges to 0.8645") {
    const McEstimate est = estimate_success({HiddenString::parse("1"), 0.1, 400000, 11}, 0);
    CHECK(std::abs(est.estimate - 0.8645) <= 4 * est.stderr_);
  }
  SUBCASE("n = 5, p = 0.01, 1e6 shots") {
    const double analytic = success_probability(5, 0.01).probability;
    CHECK(std::abs(analytic - 0.9279203650646358) <= 1e-12);
    const McEstimate est = estimate_success({HiddenString::all_ones(5), 0.01, 1000000, 20240101}, 0);
    CHECK(std::abs(est.estimate - analytic) <= 4 * est.stderr_);
  }
  SUBCASE("n = 1, p = 1, 1e6 shots") {
    const McEstimate est = estimate_success({HiddenString::parse("0"), 1.0, 1000000, 5}, 0);
    CHECK(std::abs(est.estimate - 0.5) <= 4 * est.stderr_);
  }

  CHECK_THROWS_AS(estimate_success({HiddenString::parse("1"), 0.1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(estimate_success({HiddenString::parse("1"), 1.5, 10, 1}), std::invalid_argument);
}

TEST_CASE("estimates are deterministic and independent of thread count") {
  const TrajectoryConfig cfg{HiddenString::parse("1101"), 0.2, 50001, 99};
  const McEstimate one = estimate_success(cfg, 1);
  CHECK(estimate_success(cfg, 1).successes == one.successes);
  CHECK(estimate_success(cfg, 3).successes == one.successes);
  CHECK(estimate_success(cfg, 8).successes == one.successes);
  CHECK(estimate_success(cfg, 0).estimate == one.estimate);
  CHECK(one.stderr_ == doctest::Approx(std::sqrt(one.estimate * (1 - one.estimate) / 50001)));
}

TEST_CASE("statistical consistency over 20 seeds") {
  const double expected = success_probability(3, 0.1).probability;
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const McEstimate est = estimate_success({HiddenString::all_ones(3), 0.1, 100000, 1000 + seed}, 0);
    if (std::abs(est.estimate - expected) <= 3 * est.stderr_) ++inside;
  }
  CHECK(inside >= 19);
}
