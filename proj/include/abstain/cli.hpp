#pragma once

#include <iosfwd>

namespace abstain {

// Exit codes: 0 ok, 1 failed verification, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abstain
