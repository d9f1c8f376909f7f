#pragma once

#include <ostream>

namespace f4::cli {

/// Parses argv and runs one subcommand. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace f4::cli
