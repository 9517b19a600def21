#pragma once

#include <ostream>

namespace starwalk {

/// Runs the command-line front end. Returns 0 on success, 1 when a
/// verification fails or a computation errors out, and 2 on bad usage or
/// unparsable input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starwalk
