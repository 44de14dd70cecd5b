#pragma once

#include <istream>
#include <ostream>

namespace llt {

/// Entry point of the command-line tool. Returns 0 on success, 1 when a
/// verification fails and 2 on invalid input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace llt
