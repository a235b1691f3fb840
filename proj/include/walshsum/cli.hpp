#pragma once

#include <iosfwd>

namespace walshsum::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
	ok = 0,
	config_error = 1,
	guard_rail = 2,
	assertion_failure = 3,
};

/// Parses argv, runs one subcommand, writes reports to `out` (or --out) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace walshsum::cli
