#pragma once

namespace fibgf::cli {

// Dispatches argv to a subcommand. Exit codes: 0 success, 1 parse or
// precondition failure, 2 internal-consistency failure.
int run(int argc, const char* const* argv);

}  // namespace fibgf::cli
