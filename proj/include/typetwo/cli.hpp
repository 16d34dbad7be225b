#pragma once

#include <iosfwd>

namespace typetwo {

/// Exit codes: 0 success, 1 usage or parse error, 2 budget violation or fuel
/// exhaustion, 3 internal invariant breach.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace typetwo
