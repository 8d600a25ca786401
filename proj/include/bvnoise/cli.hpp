#ifndef BVNOISE_CLI_HPP_
#define BVNOISE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace bvnoise {

/// Process exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Entry point of the bvnoise tool:
///   bvnoise simulate | sweep-p | sweep-n | threshold | verify [flags]
/// argv[0] is the program name. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bvnoise

#endif  // BVNOISE_CLI_HPP_
