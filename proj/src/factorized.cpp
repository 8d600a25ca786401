#include "bvnoise/factorized.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace bvnoise {

namespace {

ComplexMatrix depolarize(const ComplexMatrix& sigma, double p) {
  // (1 - p) sigma + p tr(sigma) I / 2
  ComplexMatrix out = sigma * (1.0 - p);
  const Complex mixed = 0.5 * p * sigma.trace();
  out(0, 0) += mixed;
  out(1, 1) += mixed;
  return out;
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& sigma) {
  return matmul(matmul(u, sigma), adjoint(u));
}

// H M H with the 1/2 prefactor applied once.
ComplexMatrix hadamard_conjugate(const ComplexMatrix& m) {
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  return {{0.5 * (a + b + c + d), 0.5 * (a - b + c - d)},
          {0.5 * (a + b - c - d), 0.5 * (a - b - c + d)}};
}

}  // namespace

QubitChain evolve_single_qubit(int s_i, double p) {
  if (s_i != 0 && s_i != 1) throw std::invalid_argument("hidden bit must be 0 or 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("error probability must lie in [0, 1], got " + std::to_string(p));
  }
  const ComplexMatrix oracle = s_i == 1 ? gates::pauli_z() : gates::identity2();
  const ComplexMatrix ground{{1.0, 0.0}, {0.0, 0.0}};

  QubitChain chain;
  chain[0] = {"sigma1", hadamard_conjugate(ground)};
  chain[1] = {"sigma2", depolarize(chain[0].mat, p)};
  chain[2] = {"sigma3", conjugate_by(oracle, chain[1].mat)};
  chain[3] = {"sigma4", depolarize(chain[2].mat, p)};
  chain[4] = {"sigma5", hadamard_conjugate(chain[3].mat)};
  chain[5] = {"sigma6", depolarize(chain[4].mat, p)};
  return chain;
}

double qubit_success_factor(int s_i, double p) {
  const QubitChain chain = evolve_single_qubit(s_i, p);
  return chain[5].mat(s_i, s_i).real();
}

ProbabilityResult success_probability_factorized(const HiddenString& s, double p) {
  // Factors only depend on (s_i, p); evaluate each distinct one once.
  const double factor[2] = {qubit_success_factor(0, p), qubit_success_factor(1, p)};
  const std::size_t n = s.size();

  if (n <= kLogSpaceThreshold) {
    double prob = 1.0;
    for (auto bit : s.bits()) prob *= factor[bit];
    return {prob, std::log2(prob)};
  }

  // Neumaier-compensated sum of log2 factors.
  const double log_factor[2] = {std::log2(factor[0]), std::log2(factor[1])};
  double sum = 0.0;
  double carry = 0.0;
  for (auto bit : s.bits()) {
    const double term = log_factor[bit];
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  }
  const double log2_prob = sum + carry;
  return {std::exp2(log2_prob), log2_prob};
}

DensityMatrix full_state_from_factors(const HiddenString& s, double p) {
  const int n = static_cast<int>(s.size());
  check_qubit_count(n);
  ComplexMatrix state = evolve_single_qubit(s.bit(1), p)[5].mat;
  for (int q = 2; q <= n; ++q) state = kron(state, evolve_single_qubit(s.bit(q), p)[5].mat);
  return DensityMatrix(n, std::move(state));
}

HiddenString factor_oracle(const ComplexMatrix& oracle, double tol) {
  if (!oracle.is_square() || !std::has_single_bit(oracle.rows()) || oracle.rows() < 2) {
    throw NonProductOracleError("oracle must be a 2^n x 2^n matrix");
  }
  const std::size_t dim = oracle.rows();
  const int n = std::countr_zero(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (r != c && std::abs(oracle(r, c)) > tol) {
        throw NonProductOracleError("oracle is not diagonal");
      }
    }
  }
  if (std::abs(oracle(0, 0) - Complex{1.0}) > tol) {
    throw NonProductOracleError("oracle entry [0,0] must be 1 for a Z^s product");
  }
  // s_i is read off the basis state with only qubit i set.
  std::vector<std::uint8_t> bits(n);
  for (int q = 1; q <= n; ++q) {
    const std::size_t idx = std::size_t{1} << (n - q);
    const Complex v = oracle(idx, idx);
    if (std::abs(v - Complex{1.0}) <= tol) {
      bits[q - 1] = 0;
    } else if (std::abs(v + Complex{1.0}) <= tol) {
      bits[q - 1] = 1;
    } else {
      throw NonProductOracleError("oracle phase on qubit " + std::to_string(q) + " is not +-1");
    }
  }
  HiddenString s(std::move(bits));
  const std::uint64_t mask = s.basis_index();
  for (std::size_t x = 0; x < dim; ++x) {
    const double expected = (std::popcount(mask & x) & 1) ? -1.0 : 1.0;
    if (std::abs(oracle(x, x) - Complex{expected}) > tol) {
      throw NonProductOracleError("oracle phases do not factor into single-qubit Z gates");
    }
  }
  return s;
}

}  // namespace bvnoise
