#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dit::cli {

/// Runs one command line (args excludes the program name). Returns the
/// exit status: 0 success, 1 precondition violation, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dit::cli
