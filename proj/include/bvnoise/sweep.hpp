#ifndef BVNOISE_SWEEP_HPP_
#define BVNOISE_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bvnoise/csv.hpp"
#include "bvnoise/hidden_string.hpp"
#include "bvnoise/svg.hpp"

namespace bvnoise {

/// How the hidden string for a given n is chosen.
struct HiddenStringChoice {
  enum class Kind { AllOnes, Explicit, Random };
  Kind kind = Kind::AllOnes;
  std::string bits;        // Kind::Explicit
  std::uint64_t seed = 0;  // Kind::Random

  /// Throws std::invalid_argument if an explicit string does not have n bits.
  HiddenString resolve(std::int64_t n) const;
};

struct SweepOptions {
  std::vector<std::int64_t> n_values;
  std::vector<double> p_values;
  HiddenStringChoice hidden;
  bool with_full = false;  // filled only where n <= kMaxQubits
  bool with_mc = false;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Seed of the Monte Carlo run at grid point (n, p_values[p_index]).
std::uint64_t grid_point_seed(std::uint64_t seed, std::int64_t n, std::size_t p_index);

/// One record per (n, p), sorted by n then p. Points are evaluated in
/// parallel; the output does not depend on scheduling.
std::vector<SweepRecord> run_sweep(const SweepOptions& options);

/// p_min + k (p_max - p_min) / (steps - 1), k = 0 .. steps - 1, with the last
/// point pinned to p_max.
std::vector<double> linear_grid(double p_min, double p_max, int steps);

std::vector<ThresholdRecord> run_threshold_curve(std::int64_t n_max, double target);

/// One series per n (x = p).
LineChart chart_success_vs_p(const std::vector<SweepRecord>& records);
/// One series per p (x = n).
LineChart chart_success_vs_n(const std::vector<SweepRecord>& records);
/// Exact threshold and small-p estimate vs n.
LineChart chart_threshold(const std::vector<ThresholdRecord>& records, double target);

}  // namespace bvnoise

#endif  // BVNOISE_SWEEP_HPP_
