#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ideallab {

// Exit codes: 0 success, 1 a verifier reported violations, 2 usage or
// parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ideallab
