#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ontosim::cli {

// Runs the tool with the arguments that follow the program name. Results go
// to `out`, diagnostics to `err`. Returns the process exit code: 0 success,
// 1 usage error, 2 data or parse error, 3 model error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontosim::cli
