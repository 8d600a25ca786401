#ifndef BVNOISE_MONTE_CARLO_HPP_
#define BVNOISE_MONTE_CARLO_HPP_

#include <cstdint>

#include "bvnoise/hidden_string.hpp"
#include "bvnoise/rng.hpp"

namespace bvnoise {

struct TrajectoryConfig {
  HiddenString s;
  double p = 0.0;
  std::uint64_t shots = 1;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on shots == 0 or p outside [0, 1].
  void validate() const;
};

struct McEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;  // sqrt(estimate (1 - estimate) / shots)
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::uint64_t successes = 0;
};

enum class Pauli { I, X, Y, Z };

/// Maps one uniform draw u in [0, 1) to a Pauli with weights
/// (1 - 3p/4, p/4, p/4, p/4), intervals in that order.
Pauli sample_pauli(double u, double p);

/// One trajectory. Each qubit is carried as a 2-amplitude pure state through
/// H, Pauli, Z^{s_i}, Pauli, H, Pauli and then measured. Per qubit, in qubit
/// order, the stream supplies the three noise draws followed by the
/// measurement draw (outcome 1 iff u < |amp1|^2).
HiddenString sample_run(const HiddenString& s, double p, CounterRng& rng);

/// Fraction of shots whose outcome equals s. Shot k draws from
/// CounterRng::for_stream(seed, k), so the result does not depend on the
/// order in which shots are evaluated. threads = 0 picks hardware
/// concurrency.
McEstimate estimate_success(const TrajectoryConfig& cfg, unsigned threads = 1);

}  // namespace bvnoise

#endif  // BVNOISE_MONTE_CARLO_HPP_
