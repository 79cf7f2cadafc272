#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mly {

/// Exit status of a command: laws hold / construction succeeded, a law was
/// violated (the report carries the witness), or the input was unusable.
enum class Exit : int { ok = 0, violation = 1, input_error = 2 };

/// Runs one command line (without the program name). The JSON report goes
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mly
