#pragma once

#include <string>
#include <vector>

namespace efd::cli {

// Entry point behind the efd binary; also callable in-process by tests.
// Returns the process exit code: 0 on success, nonzero with a one-line
// diagnostic on stderr otherwise.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without the program name

}  // namespace efd::cli
