#pragma once

#include <iosfwd>

namespace spheromo {

// Exit codes: 0 pass, 1 fail, 2 input error, 3 unsupported or incomplete.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spheromo
