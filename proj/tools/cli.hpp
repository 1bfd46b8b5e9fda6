#pragma once

#include <iosfwd>

namespace flowcut::cli {

enum ExitCode : int { ok = 0, config_error = 1, io_error = 2 };

/// Entry point of the `flowcut` tool. Data goes to `out` and the output
/// files, logging and timing to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flowcut::cli
