#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace obill {

// args exclude the program name; returns the process exit code
// 0 ok, 1 verification failure, 2 usage or domain error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace obill
