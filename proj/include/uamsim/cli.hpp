#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace uam
{

enum ExitCode : int
{
    kExitSafe = 0,
    kExitError = 1,
    kExitUnsafe = 2,
    kExitInconclusive = 3,
};

/// Command-line driver. `args` excludes the program name.
///
///   run --scenario <file> [--log <csv>] [--report <json>] [--max-ticks N] [--shared-level <ft>]
///   validate --scenario <file>
///   demo --experiment {1,2,2-fixed} [--log <csv>] [--report <json>] [--save-scenario <json>]
int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace uam
