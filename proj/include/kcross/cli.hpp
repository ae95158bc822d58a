#pragma once

namespace kcross {

/// Runs the command-line interface. Exit status: 0 on success, 1 when a
/// verification check fails, 2 on usage or input-format errors, 3 when a
/// drawing or matching invariant is violated.
int run_cli(int argc, const char* const* argv);

} // namespace kcross
