#pragma once

namespace repsel {

/// Command-line entry point. Subcommands: solve, verify, oracle, simulate,
/// sweep, compare, search-ushape. Returns 0 on success, 1 when a check
/// fails, 2 on usage or input errors.
int cli_main(int argc, const char* const* argv);

}  // namespace repsel
