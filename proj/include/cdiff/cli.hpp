#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cdiff::cli {

/// Runs one command line (without the program name). Output goes to `out` only on success;
/// diagnostics go to `err`. Returns 0 on success, 1 for a C_PRIMITIVE mismatch under --strict,
/// 2 for invalid input or usage errors, 3 if two internal routes disagree.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdiff::cli
