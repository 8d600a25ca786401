#include <doctest.h>

#include <cmath>
#include <string>

#include "bvnoise/density.hpp"
#include "bvnoise/rng.hpp"
#include "oracles.hpp"

using namespace bvnoise;

TEST_CASE("init_zero_state") {
  const DensityMatrix one = init_zero_state(1);
  CHECK(one.matrix()(0, 0) == Complex{1.0});
  CHECK(one.matrix()(1, 1) == Complex{0.0});
  const DensityMatrix two = init_zero_state(2);
  CHECK(two.dim() == 4);
  double total = 0.0;
  for (auto e : two.matrix().entries()) total += std::abs(e);
  CHECK(total == 1.0);
  for (int n = 1; n <= 8; ++n) CHECK(init_zero_state(n).matrix().trace() == Complex{1.0});
  CHECK_THROWS_AS(init_zero_state(0), std::out_of_range);
  CHECK_THROWS_AS(init_zero_state(kMaxQubits + 1), std::out_of_range);
}

TEST_CASE("build_oracle") {
  CHECK(max_abs_diff(build_oracle(HiddenString::parse("000")), ComplexMatrix::identity(8)) == 0.0);
  CHECK(max_abs_diff(build_oracle(HiddenString::parse("1")), gates::pauli_z()) == 0.0);
  const Complex expected[] = {1.0, 1.0, -1.0, -1.0};
  CHECK(max_abs_diff(build_oracle(HiddenString::parse("10")), ComplexMatrix::diagonal(expected)) == 0.0);

  // Equals the enumeration oracle and the kron-fold of Z^{s_i}; squares to I.
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
      const HiddenString s = HiddenString::from_basis_index(x, n);
      const ComplexMatrix u = build_oracle(s);
      CHECK(max_abs_diff(u, oracle::phase_oracle(s)) == 0.0);
      ComplexMatrix fold = s.bit(1) ? gates::pauli_z() : gates::identity2();
      for (int q = 2; q <= n; ++q) fold = kron(fold, s.bit(q) ? gates::pauli_z() : gates::identity2());
      CHECK(max_abs_diff(u, fold) == 0.0);
      CHECK(max_abs_diff(matmul(u, u), ComplexMatrix::identity(u.rows())) <= 1e-12);
    }
  }
}

TEST_CASE("apply_unitary examples") {
  const DensityMatrix zero = init_zero_state(1);
  CHECK(max_abs_diff(apply_unitary(zero, gates::identity2()).matrix(), zero.matrix()) == 0.0);

  const DensityMatrix plus = apply_unitary(zero, gates::hadamard());
  for (auto e : plus.matrix().entries()) CHECK(std::abs(e - Complex{0.5}) <= 1e-15);

  const DensityMatrix mixed(1, ComplexMatrix::identity(2) * 0.5);
  CHECK(max_abs_diff(apply_unitary(mixed, gates::hadamard()).matrix(), mixed.matrix()) <= 1e-15);

  CHECK_THROWS_AS(apply_unitary(zero, ComplexMatrix::identity(4)), DimensionError);
}

TEST_CASE("single-qubit unitary by index arithmetic matches the dense product") {
  CounterRng rng(5);
  for (int n = 1; n <= 4; ++n) {
    const DensityMatrix rho(n, oracle::random_density(std::size_t{1} << n, rng));
    for (int q = 1; q <= n; ++q) {
      for (const auto& g : {gates::hadamard(), gates::pauli_y()}) {
        const auto fast = apply_single_qubit_unitary(rho, q, g);
        const auto dense = apply_unitary(rho, oracle::embed(g, q, n));
        CHECK(max_abs_diff(fast.matrix(), dense.matrix()) <= 1e-14);
      }
    }
  }
}

TEST_CASE("apply_depolarizing examples") {
  const DensityMatrix plus = apply_unitary(init_zero_state(1), gates::hadamard());
  CHECK(max_abs_diff(apply_depolarizing(plus, 1, 0.0).matrix(), plus.matrix()) <= 1e-15);
  CHECK(max_abs_diff(apply_depolarizing(plus, 1, 1.0).matrix(), ComplexMatrix::identity(2) * 0.5) <= 1e-15);

  // (1 - 0.1) * 1/2 + 0 = 0.45 off the diagonal; the diagonal stays 1/2.
  const ComplexMatrix out = apply_depolarizing(plus, 1, 0.1).matrix();
  CHECK(std::abs(out(0, 1) - Complex{0.45}) <= 1e-15);
  CHECK(std::abs(out(1, 0) - Complex{0.45}) <= 1e-15);
  CHECK(std::abs(out(0, 0) - Complex{0.5}) <= 1e-15);
  CHECK(std::abs(out(1, 1) - Complex{0.5}) <= 1e-15);

  CHECK_THROWS_AS(apply_depolarizing(plus, 1, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(apply_depolarizing(plus, 1, 1.01), std::invalid_argument);
  CHECK_THROWS_AS(apply_depolarizing(plus, 0, 0.1), std::out_of_range);
  CHECK_THROWS_AS(apply_depolarizing(plus, 2, 0.1), std::out_of_range);
}

TEST_CASE("Kraus path equals the convex form on every qubit") {
  CounterRng rng(99);
  for (int n = 1; n <= 4; ++n) {
    const DensityMatrix rho(n, oracle::random_density(std::size_t{1} << n, rng));
    for (int q = 1; q <= n; ++q) {
      for (double p : {0.0, 0.01, 0.1, 0.5, 0.9, 1.0}) {
        CHECK(max_abs_diff(apply_depolarizing(rho, q, p).matrix(),
                           oracle::depolarize_dense(rho.matrix(), q, n, p)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("Kraus operators are complete") {
  for (double p : {0.0, 0.3, 1.0}) {
    ComplexMatrix sum(2, 2);
    for (const auto& k : depolarizing_kraus(p)) sum += matmul(adjoint(k), k);
    CHECK(max_abs_diff(sum, ComplexMatrix::identity(2)) <= 1e-15);
  }
}

TEST_CASE("channels on disjoint qubits commute") {
  CounterRng rng(17);
  const DensityMatrix rho(3, oracle::random_density(8, rng));
  const auto a = apply_depolarizing(apply_depolarizing(rho, 1, 0.2), 2, 0.35);
  const auto b = apply_depolarizing(apply_depolarizing(rho, 2, 0.35), 1, 0.2);
  CHECK(max_abs_diff(a.matrix(), b.matrix()) <= 1e-12);
}

TEST_CASE("run_bv_full examples") {
  SUBCASE("noiseless output is the projector onto s") {
    const HiddenString s = HiddenString::parse("1011");
    const DensityMatrix out = run_bv_full(s, 0.0);
    ComplexMatrix expected(16, 16);
    expected(s.basis_index(), s.basis_index()) = 1.0;
    CHECK(max_abs_diff(out.matrix(), expected) <= 1e-12);
  }
  SUBCASE("p = 1 gives the maximally mixed state") {
    const DensityMatrix out = run_bv_full(HiddenString::parse("110"), 1.0);
    CHECK(max_abs_diff(out.matrix(), ComplexMatrix::identity(8) * 0.125) <= 1e-12);
  }
  SUBCASE("n = 1, s = 1, p = 0.1") {
    // sigma5 = diag(0.095, 0.905), sigma6[1,1] = 0.9 * 0.905 + 0.05.
    const DensityMatrix out = run_bv_full(HiddenString::parse("1"), 0.1);
    CHECK(std::abs(out.matrix()(1, 1).real() - 0.8645) <= 1e-12);
  }
}

TEST_CASE("run_bv_full agrees with the dense circuit") {
  CounterRng rng(1234);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 3; ++t) {
      const HiddenString s = HiddenString::random(n, rng.next_u64());
      const double p = rng.uniform();
      CHECK(max_abs_diff(run_bv_full(s, p).matrix(), oracle::bv_dense(s, p)) <= 1e-12);
    }
  }
  // n = 3, p = 0.1: the dense circuit gives 0.646092936125 at |111>.
  const HiddenString s = HiddenString::all_ones(3);
  const double dense = oracle::bv_dense(s, 0.1)(7, 7).real();
  CHECK(std::abs(dense - 0.646092936125) <= 1e-12);
  CHECK(std::abs(measure_probability(run_bv_full(s, 0.1), s) - dense) <= 1e-12);
}

TEST_CASE("every stage is a valid state with real diagonal") {
  CounterRng rng(8);
  for (int n = 1; n <= 4; ++n) {
    for (double p : {0.0, 0.05, 0.5, 1.0}) {
      const HiddenString s = HiddenString::random(n, rng.next_u64());
      int stages = 0;
      run_bv_full(s, p, [&](std::string_view label, const DensityMatrix& rho) {
        ++stages;
        INFO("stage " << std::string(label) << " n=" << n << " p=" << p);
        CHECK(std::abs(rho.matrix().trace() - Complex{1.0}) <= 1e-10);
        for (std::size_t i = 0; i < rho.dim(); ++i) CHECK(std::abs(rho.matrix()(i, i).imag()) <= 1e-12);
        CHECK(rho.validate().ok());
      });
      CHECK(stages == 7);
    }
  }
}

TEST_CASE("noiseless completeness for every s up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t idx = 0; idx < (1ULL << n); ++idx) {
      const HiddenString s = HiddenString::from_basis_index(idx, n);
      const DensityMatrix out = run_bv_full(s, 0.0);
      double total = 0.0;
      for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        const double pr = measure_probability(out, HiddenString::from_basis_index(x, n));
        total += pr;
        if (x != idx) CHECK(pr <= 1e-12);
      }
      CHECK(std::abs(total - 1.0) <= 1e-12);
      CHECK(std::abs(measure_probability(out, s) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("measure_probability") {
  const HiddenString s = HiddenString::parse("01");
  ComplexMatrix proj(4, 4);
  proj(1, 1) = 1.0;
  CHECK(measure_probability(DensityMatrix(2, proj), s) == 1.0);

  const DensityMatrix mixed(3, ComplexMatrix::identity(8) * 0.125);
  for (std::uint64_t x = 0; x < 8; ++x) {
    CHECK(measure_probability(mixed, HiddenString::from_basis_index(x, 3)) == 0.125);
  }
  CHECK_THROWS_AS(measure_probability(mixed, s), DimensionError);

  ComplexMatrix tiny_negative(2, 2);
  tiny_negative(0, 0) = -1e-12;
  tiny_negative(1, 1) = 1.0 + 1e-12;
  CHECK(measure_probability(DensityMatrix(1, tiny_negative), HiddenString::parse("0")) == 0.0);
  CHECK(measure_probability(DensityMatrix(1, tiny_negative), HiddenString::parse("1")) == 1.0);

  ComplexMatrix broken(2, 2);
  broken(0, 0) = -0.5;
  broken(1, 1) = 1.5;
  CHECK_THROWS_AS(measure_probability(DensityMatrix(1, broken), HiddenString::parse("0")), std::domain_error);
  CHECK_THROWS_AS(measure_probability(DensityMatrix(1, broken), HiddenString::parse("1")), std::domain_error);
}

TEST_CASE("hidden string conventions") {
  const HiddenString s = HiddenString::parse("1011");
  CHECK(s.basis_index() == 11);
  CHECK(s.bit(1) == 1);
  CHECK(s.bit(2) == 0);
  CHECK(HiddenString::from_basis_index(11, 4) == s);
  CHECK(s.to_string() == "1011");
  CHECK_THROWS_AS(HiddenString::parse("10a1"), std::invalid_argument);
  CHECK_THROWS_AS(HiddenString::parse(""), std::invalid_argument);
  CHECK(HiddenString::random(40, 5) == HiddenString::random(40, 5));
  CHECK_THROWS_AS(run_bv_full(HiddenString::all_ones(13), 0.1), std::out_of_range);
  CHECK_THROWS_AS(run_bv_full(HiddenString::all_ones(2), 1.5), std::invalid_argument);
}
