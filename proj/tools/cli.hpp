#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicoeff::cli {

// Runs one invocation of the command-line tool. args excludes the program
// name. All regular output goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success (verify: every checked row PASSed), 1 usage problem
// (bad syntax, unknown token, malformed number), 2 invalid parameter value or
// infeasible input, 3 verification failure.
//
// Identical arguments plus an identical BICOEFF_SEED environment produce
// byte-identical output; the --seed flag takes precedence over the variable.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bicoeff::cli
