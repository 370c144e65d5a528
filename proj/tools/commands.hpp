#pragma once

#include <ostream>

namespace tamex::cli {

// Exit codes: 0 success, 1 internal failure, 2 bad input, 3 budget exhausted.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tamex::cli
