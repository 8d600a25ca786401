#include "bvnoise/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "bvnoise/analytic.hpp"
#include "bvnoise/density.hpp"
#include "bvnoise/factorized.hpp"
#include "bvnoise/matrix.hpp"
#include "bvnoise/monte_carlo.hpp"
#include "bvnoise/rng.hpp"

namespace bvnoise {

namespace {

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

ComplexMatrix random_matrix(std::size_t dim, CounterRng& rng) {
  ComplexMatrix m(dim, dim);
  for (auto& e : m.entries()) e = Complex{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
  return m;
}

DensityMatrix random_state(int n, CounterRng& rng) {
  const ComplexMatrix g = random_matrix(std::size_t{1} << n, rng);
  ComplexMatrix rho = matmul(g, adjoint(g));
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix(n, std::move(rho));
}

// (1 - p) rho + p (tr_q rho) (x) I/2 by direct index arithmetic; independent
// of the Kraus path used by the simulator.
DensityMatrix depolarize_convex(const DensityMatrix& rho, int qubit, double p) {
  const std::size_t mask = std::size_t{1} << (rho.num_qubits() - qubit);
  const std::size_t dim = rho.dim();
  ComplexMatrix out = rho.matrix() * (1.0 - p);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (((r ^ c) & mask) != 0) continue;
      const std::size_t r0 = r & ~mask, c0 = c & ~mask;
      const Complex reduced = rho.matrix()(r0, c0) + rho.matrix()(r0 | mask, c0 | mask);
      out(r, c) += 0.5 * p * reduced;
    }
  }
  return DensityMatrix(rho.num_qubits(), std::move(out));
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

const std::vector<double>& p_grid() {
  static const std::vector<double> grid{0.0, 0.001, 0.01, 0.1, 0.3, 0.7, 1.0};
  return grid;
}

CheckResult check_gate_unitarity() {
  double worst = 0.0;
  for (const auto& g : {gates::hadamard(), gates::pauli_x(), gates::pauli_y(), gates::pauli_z(),
                        gates::identity2()}) {
    worst = std::max(worst, max_abs_diff(matmul(g, adjoint(g)), gates::identity2()));
  }
  return {"gate-unitarity", worst <= 1e-12, "max |UU†-I| = " + sci(worst)};
}

CheckResult check_kron_algebra(CounterRng& rng) {
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix(2, rng), b = random_matrix(2, rng), c = random_matrix(2, rng),
               d = random_matrix(2, rng);
    worst = std::max(worst, max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))));
    worst = std::max(worst, max_abs_diff(matmul(kron(a, b), kron(c, d)),
                                         kron(matmul(a, c), matmul(b, d))));
    worst = std::max(worst, std::abs(kron(a, b).trace() - a.trace() * b.trace()));
  }
  return {"kron-algebra", worst <= 1e-12, "max deviation = " + sci(worst)};
}

CheckResult check_alpha_beta_identity(const std::function<double(double)>& beta) {
  double worst_identity = 0.0;
  double worst_chain = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    const double p = k / 1000.0;
    const double sum = alpha_of(p) + beta(p);
    const double q = 1.0 - p;
    worst_identity = std::max(worst_identity, std::abs(sum - (1.0 + q * q * q) / 2.0));
    for (int bit = 0; bit <= 1; ++bit) {
      worst_chain = std::max(worst_chain, std::abs(qubit_success_factor(bit, p) - sum));
    }
  }
  const bool ok = worst_identity <= 1e-14 && worst_chain <= 1e-12;
  return {"alpha-beta-identity", ok,
          "max |a+b-(1+(1-p)^3)/2| = " + sci(worst_identity) + ", max |chain-(a+b)| = " +
              sci(worst_chain)};
}

CheckResult check_sigma6_closed_form(const std::function<double(double)>& beta) {
  double worst = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    for (int bit = 0; bit <= 1; ++bit) {
      ComplexMatrix expected(2, 2);
      expected(bit, bit) = alpha_of(p);  // rho3 = |s_i><s_i|
      expected(0, 0) += beta(p);
      expected(1, 1) += beta(p);
      worst = std::max(worst, max_abs_diff(evolve_single_qubit(bit, p)[5].mat, expected));
    }
  }
  return {"sigma6-closed-form", worst <= 1e-12, "max elementwise gap = " + sci(worst)};
}

CheckResult check_factor_s_independence() {
  double worst = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    worst = std::max(worst, std::abs(qubit_success_factor(0, p) - qubit_success_factor(1, p)));
  }
  return {"factor-s-independence", worst <= 1e-12, "max gap = " + sci(worst)};
}

CheckResult check_depolarizing_forms(CounterRng& rng) {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const DensityMatrix rho = random_state(n, rng);
    for (int q = 1; q <= n; ++q) {
      for (double p : p_grid()) {
        worst = std::max(worst, max_abs_diff(apply_depolarizing(rho, q, p).matrix(),
                                             depolarize_convex(rho, q, p).matrix()));
      }
    }
  }
  return {"depolarizing-kraus-vs-convex", worst <= 1e-12, "max gap = " + sci(worst)};
}

CheckResult check_noiseless(int n_max, double tol, CounterRng& rng) {
  double worst = 0.0;
  int cases = 0;
  for (int n = 1; n <= n_max; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<HiddenString> strings;
    if (n <= 4) {
      for (std::size_t x = 0; x < dim; ++x) strings.push_back(HiddenString::from_basis_index(x, n));
    } else {
      for (int t = 0; t < 10; ++t) strings.push_back(HiddenString::random(n, rng.next_u64()));
    }
    for (const auto& s : strings) {
      const DensityMatrix rho = run_bv_full(s, 0.0);
      for (std::size_t x = 0; x < dim; ++x) {
        const double expected = x == s.basis_index() ? 1.0 : 0.0;
        const double got = measure_probability(rho, HiddenString::from_basis_index(x, n));
        worst = std::max(worst, std::abs(got - expected));
      }
      worst = std::max(worst, std::abs(success_probability_factorized(s, 0.0).probability - 1.0));
      ++cases;
    }
  }
  return {"noiseless-completeness", worst <= tol,
          std::to_string(cases) + " strings, max gap = " + sci(worst)};
}

CheckResult check_full_vs_factorized(int n_max, double tol, CounterRng& rng) {
  double worst = 0.0;
  const int cases = std::max(20, 4 * n_max);
  for (int t = 0; t < cases; ++t) {
    const int n = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n_max));
    const HiddenString s = HiddenString::random(n, rng.next_u64());
    const double p = rng.uniform();
    worst = std::max(worst, frobenius_distance(run_bv_full(s, p).matrix(),
                                               full_state_from_factors(s, p).matrix()));
  }
  return {"full-vs-factorized", worst <= tol,
          std::to_string(cases) + " random (s, p), max Frobenius = " + sci(worst)};
}

CheckResult check_full_vs_analytic(int n_max, double tol) {
  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const HiddenString s = HiddenString::all_ones(n);
    for (double p : p_grid()) {
      const double full = measure_probability(run_bv_full(s, p), s);
      worst = std::max(worst, std::abs(full - success_probability(n, p).probability));
    }
  }
  return {"full-vs-analytic", worst <= tol, "max gap = " + sci(worst)};
}

CheckResult check_density_validity(int n_max, CounterRng& rng) {
  bool ok = true;
  double worst_eig = 0.0;
  for (int n = 1; n <= std::min(n_max, 4); ++n) {
    for (double p : p_grid()) {
      const HiddenString s = HiddenString::random(n, rng.next_u64());
      run_bv_full(s, p, [&](std::string_view, const DensityMatrix& rho) {
        const ValidationReport report = rho.validate();
        ok = ok && report.ok();
        worst_eig = std::min(worst_eig, report.min_eigenvalue);
      });
    }
  }
  return {"density-validity", ok, "min eigenvalue over all stages = " + sci(worst_eig)};
}

CheckResult check_analytic_vs_factorized() {
  std::vector<std::int64_t> ns;
  for (int n = 1; n <= 64; ++n) ns.push_back(n);
  for (int n : {100, 512, 513, 1000}) ns.push_back(n);
  double worst = 0.0;
  for (auto n : ns) {
    const HiddenString s = HiddenString::all_ones(static_cast<std::size_t>(n));
    for (int k = 0; k <= 20; ++k) {
      const double p = k / 20.0;
      worst = std::max(worst, relative_gap(success_probability(n, p).probability,
                                           success_probability_factorized(s, p).probability));
    }
  }
  return {"analytic-vs-factorized", worst <= 1e-12, "max relative gap = " + sci(worst)};
}

CheckResult check_threshold() {
  double worst_gap = 0.0;
  double worst_residual = 0.0;
  for (std::int64_t n : {1, 2, 5, 10, 100, 1000}) {
    const ThresholdResult t = threshold_p(n);
    worst_gap = std::max(worst_gap, std::abs(t.p_star - t.p_closed_form));
    worst_residual = std::max(worst_residual, t.residual);
  }
  return {"threshold-bisection-vs-closed-form", worst_gap <= 1e-10 && worst_residual <= 1e-10,
          "max |p*-closed| = " + sci(worst_gap) + ", max residual = " + sci(worst_residual)};
}

CheckResult check_twirl(CounterRng& rng) {
  const ComplexMatrix paulis[4] = {gates::identity2(), gates::pauli_x(), gates::pauli_y(),
                                   gates::pauli_z()};
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix rho = random_state(1, rng).matrix();
    const double p = rng.uniform();
    ComplexMatrix twirled = rho * (1.0 - 0.75 * p);
    for (int k = 1; k < 4; ++k) twirled += matmul(matmul(paulis[k], rho), paulis[k]) * (0.25 * p);
    ComplexMatrix expected = rho * (1.0 - p);
    expected(0, 0) += 0.5 * p;
    expected(1, 1) += 0.5 * p;
    worst = std::max(worst, max_abs_diff(twirled, expected));
  }
  return {"mc-twirl-identity", worst <= 1e-12, "max gap = " + sci(worst)};
}

CheckResult check_mc_consistency(std::uint64_t shots, std::uint64_t seed) {
  const double expected = success_probability(3, 0.1).probability;
  int inside = 0;
  constexpr int kSeeds = 20;
  for (int k = 0; k < kSeeds; ++k) {
    TrajectoryConfig cfg{HiddenString::all_ones(3), 0.1, shots, mix64(seed + k)};
    const McEstimate est = estimate_success(cfg, 0);
    if (std::abs(est.estimate - expected) <= 3.0 * est.stderr_) ++inside;
  }
  return {"mc-consistency", inside >= 19,
          std::to_string(inside) + "/" + std::to_string(kSeeds) + " seeds within 3 stderr at n=3, p=0.1, shots=" +
              std::to_string(shots)};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.n_max < 1 || options.n_max > kMaxQubits) {
    throw std::invalid_argument("verify n-max must lie in 1.." + std::to_string(kMaxQubits));
  }
  const auto beta = options.beta ? options.beta : std::function<double(double)>(beta_of);
  CounterRng rng(options.seed);

  std::vector<CheckResult> results;
  results.push_back(check_gate_unitarity());
  results.push_back(check_kron_algebra(rng));
  results.push_back(check_alpha_beta_identity(beta));
  results.push_back(check_sigma6_closed_form(beta));
  results.push_back(check_factor_s_independence());
  results.push_back(check_depolarizing_forms(rng));
  results.push_back(check_noiseless(options.n_max, options.tolerance, rng));
  results.push_back(check_full_vs_factorized(options.n_max, options.tolerance, rng));
  results.push_back(check_full_vs_analytic(options.n_max, options.tolerance));
  results.push_back(check_density_validity(options.n_max, rng));
  results.push_back(check_analytic_vs_factorized());
  results.push_back(check_threshold());
  results.push_back(check_twirl(rng));
  results.push_back(check_mc_consistency(options.shots, options.seed));
  return results;
}

int report_verification(const std::vector<CheckResult>& results, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ' ' << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  out << "SUMMARY " << (results.size() - failed) << '/' << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace bvnoise
