#ifndef BVNOISE_FACTORIZED_HPP_
#define BVNOISE_FACTORIZED_HPP_

#include <array>
#include <stdexcept>
#include <string_view>

#include "bvnoise/analytic.hpp"
#include "bvnoise/density.hpp"
#include "bvnoise/hidden_string.hpp"
#include "bvnoise/matrix.hpp"

namespace bvnoise {

/// One single-qubit stage sigma_1 ... sigma_6 of the per-qubit chain
///   |0><0| -H-> sigma1 -E-> sigma2 -Z^s-> sigma3 -E-> sigma4 -H-> sigma5 -E-> sigma6
struct QubitStage {
  std::string_view label;
  ComplexMatrix mat{2, 2};
};

using QubitChain = std::array<QubitStage, 6>;

/// Per-qubit evolution for hidden bit s_i in {0, 1}.
QubitChain evolve_single_qubit(int s_i, double p);

/// <s_i|sigma6|s_i>, the success factor of one qubit.
double qubit_success_factor(int s_i, double p);

/// Number of qubits above which the product of factors is accumulated in
/// log space.
inline constexpr std::size_t kLogSpaceThreshold = 512;

/// prod_i <s_i|sigma6^i|s_i>. Any n; cost is O(n).
ProbabilityResult success_probability_factorized(const HiddenString& s, double p);

/// kron of the sigma6 factors as a 2^n density matrix, n <= kMaxQubits.
DensityMatrix full_state_from_factors(const HiddenString& s, double p);

/// Thrown when an oracle is not a tensor product of Z^{s_i}.
class NonProductOracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Recovers s from a 2^n phase oracle that equals kron_i Z^{s_i} within tol.
/// Anything else (non-diagonal, wrong phases, entangling diagonal phases) is
/// rejected with NonProductOracleError, since the factorized backend is
/// only exact for product oracles.
HiddenString factor_oracle(const ComplexMatrix& oracle, double tol = 1e-12);

}  // namespace bvnoise

#endif  // BVNOISE_FACTORIZED_HPP_
