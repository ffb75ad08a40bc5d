#pragma once

#include <string>
#include <vector>

namespace ugx {

// Command-line front end. Exit codes: 0 success, 1 input error, 2 numerical
// or invariant error, 3 when a rounding outcome trips the failure gate
// (output files are still written in that case).
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // args without argv[0]

}  // namespace ugx
