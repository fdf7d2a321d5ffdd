#pragma once

namespace csdirac::cli {

// Parses argv, dispatches to a subcommand, writes the requested report to
// stdout or --out. Returns 0 on success, 2 on parameter/config errors, 3
// when a verification suite has a failing check.
int run(int argc, const char* const* argv);

}  // namespace csdirac::cli
