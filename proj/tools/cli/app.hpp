#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fspi::cli {

/// Parses the command line and runs one command. Returns the process exit code: 0 on
/// success, 2 on a usage error, 1 on any other failure. Failures print one line
/// `error: <kind>: <message>` to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fspi::cli
