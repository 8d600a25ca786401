#ifndef BVNOISE_DENSITY_HPP_
#define BVNOISE_DENSITY_HPP_

#include <functional>
#include <span>
#include <string_view>

#include "bvnoise/hidden_string.hpp"
#include "bvnoise/matrix.hpp"

namespace bvnoise {

/// n-qubit density matrix, 2^n x 2^n, 1 <= n <= kMaxQubits.
class DensityMatrix {
 public:
  DensityMatrix(int n, ComplexMatrix mat);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  ComplexMatrix& matrix() { return mat_; }

  ValidationReport validate(const DensityTolerances& tol = {}) const {
    return validate_density(mat_, tol);
  }

 private:
  int n_;
  ComplexMatrix mat_;
};

/// Throws std::out_of_range unless 1 <= n <= kMaxQubits.
void check_qubit_count(int n);

/// |0...0><0...0|.
DensityMatrix init_zero_state(int n);

/// Diagonal phase oracle with entry [x, x] = (-1)^(s.x mod 2).
ComplexMatrix build_oracle(const HiddenString& s);

/// U rho U†, computed with dense products.
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

/// U_q rho U_q† for a 2x2 unitary acting on one qubit (1-based), by index
/// arithmetic over the qubit's 2x2 blocks.
DensityMatrix apply_single_qubit_unitary(const DensityMatrix& rho, int qubit,
                                         const ComplexMatrix& u);

/// sum_k K_k rho K_k† with every K_k a 2x2 operator on one qubit (1-based).
DensityMatrix apply_single_qubit_kraus(const DensityMatrix& rho, int qubit,
                                       std::span<const ComplexMatrix> kraus);

/// Kraus operators sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z.
std::vector<ComplexMatrix> depolarizing_kraus(double p);

/// Single-qubit depolarizing channel (1-p) rho + p I/2 on one qubit.
DensityMatrix apply_depolarizing(const DensityMatrix& rho, int qubit, double p);

/// Called after each stage of run_bv_full with a stage label.
using StageObserver = std::function<void(std::string_view, const DensityMatrix&)>;

/// Noisy Bernstein-Vazirani circuit on the full 2^n x 2^n state:
///   H layer, noise, oracle, noise, H layer, noise.
/// Every qubit gets a depolarizing channel after every layer.
DensityMatrix run_bv_full(const HiddenString& s, double p, const StageObserver& observer = {});

/// <x|rho|x>, clamped to [0, 1]. Values beyond 1e-9 outside that range throw
/// std::domain_error.
double measure_probability(const DensityMatrix& rho, const HiddenString& x);

}  // namespace bvnoise

#endif  // BVNOISE_DENSITY_HPP_
