#ifndef BVNOISE_VERIFY_HPP_
#define BVNOISE_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace bvnoise {

struct VerifyOptions {
  int n_max = 6;             // largest n for full-density checks
  double tolerance = 1e-10;  // cross-backend tolerance
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  /// beta(p) under test. Replaceable so a fault can be injected.
  std::function<double(double)> beta;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-backend equivalence, algebraic identities and Monte Carlo
/// statistics. Throws std::invalid_argument for n_max outside 1..12.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Prints "PASS <name> <detail>" / "FAIL <name> <detail>" per check and a
/// summary line. Returns 0 if every check passed, 1 otherwise.
int report_verification(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace bvnoise

#endif  // BVNOISE_VERIFY_HPP_
