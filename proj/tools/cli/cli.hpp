#pragma once

#include <ostream>

namespace ep::cli {

/// Exit codes: 0 PASS or INFO, 1 FAIL, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ep::cli
