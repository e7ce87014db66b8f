#pragma once

#include <iosfwd>

namespace drckit {

// Command line driver. Returns the process exit code: 0 when every requested
// check passed, 1 when some check failed, 2 when the invocation or an input
// file was malformed.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drckit
