#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace haltkit {

// Exit codes: 0 success (run halted / any verdict / all rows pass),
// 1 usage or parse error, 2 fault, 3 budget exhaustion, 4 failed table rows.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace haltkit
