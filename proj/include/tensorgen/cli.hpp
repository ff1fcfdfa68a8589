#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tensorgen {

// Runs the command-line interface on the given arguments (argv without the
// program name), writing the rendered payload to `out` and diagnostics to
// `err`. Returns the process exit code:
//   0  success, no violations
//   1  validation or internal error, or a verification sweep that found
//      violations
//   2  refusal: generator construction requested for a non-standard pair
//
// Output is deterministic: identical arguments and environment produce
// identical bytes. The oracle budget (default 2500 grid cells) can be
// overridden with the TENSORGEN_ORACLE_BUDGET environment variable.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tensorgen
