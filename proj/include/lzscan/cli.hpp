#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lzscan {

// Exit codes: 0 success, 1 verification failure, 2 usage error or unreadable input.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lzscan
