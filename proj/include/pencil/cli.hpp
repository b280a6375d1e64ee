#pragma once

#include <iosfwd>

namespace pencil {

/// Entry point of the pencil command-line tool. Returns 0 on success, 1 when a
/// verification fails and 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pencil
