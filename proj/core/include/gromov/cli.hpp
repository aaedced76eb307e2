#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gromov {

// Subcommand dispatcher behind the gromov-lab binary. Prints one
// machine-parsable result line to `out`; usage goes to `err`.
//
// Exit codes: 0 success, 2 validation failure, 3 cap/budget exhaustion with
// partial output, 64 usage error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void print_usage(std::ostream& err);

}  // namespace gromov
