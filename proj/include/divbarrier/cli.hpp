#pragma once

#include <iosfwd>

namespace divbarrier {

/// Exit codes: 0 success, 2 validation/usage errors, 3 numerical or
/// singularity errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the command-line frontend. Results go to `out`, diagnostics to
/// `err`. Identical argument vectors produce byte-identical output.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace divbarrier
