#pragma once

#include <ostream>

namespace polverif {

// Exit codes: 0 success / everything holds, 1 a violation was found, 2 usage
// or load error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polverif
