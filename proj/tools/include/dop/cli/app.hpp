#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dop::cli {

/// Runs one `dop` invocation; args excludes the program name. Returns the
/// process exit code: 0 decided or complete, 2 Unknown or incomplete, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dop::cli
