#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chern::cli {

// Runs one subcommand. Exit codes: 0 success, 1 usage error, 2 parse error,
// 3 verification or check failure. Diagnostics go to `err` as a single
// machine-parsable line per failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chern::cli
