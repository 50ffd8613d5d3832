#ifndef SKEWLAB_CLI_HPP
#define SKEWLAB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "skewlab/error.hpp"

namespace skewlab {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitSelftestFailed = 1, kExitParse = 2, kExitDomain = 3, kExitInconclusive = 4 };

/// ParseError -> 2, Inconclusive -> 4, every other library error -> 3.
int exit_code_for(ErrorCode code);

/// Parse argv, run the subcommand, write results to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

enum class SelftestLevel { Fast, Full };

/// Cross-checks every closed form against its exhaustive counterpart on small towers.
/// Prints one PASS/FAIL line per check; returns true when all pass.
bool run_selftest(SelftestLevel level, std::uint64_t seed, std::ostream& out);

/// The worked-example fixture document (JSON, sorted keys, trailing newline).
std::string generate_fixtures(std::uint64_t seed = 0);

}  // namespace skewlab

#endif
