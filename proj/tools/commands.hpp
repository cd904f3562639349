#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace folia::cli {

/// Exit status: 0 success, 1 analysis error, 2 usage or syntax error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folia::cli
