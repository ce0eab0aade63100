#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qhurwitz::cli {

// Runs the command line (without the program name). Output goes to out
// unless --out names a file. Exit codes: 0 success, 1 failed verification,
// 2 usage or evaluation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhurwitz::cli
