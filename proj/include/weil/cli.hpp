#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weil {

// Full CLI entry point; the weil-lab binary is a thin wrapper. Returns the
// process exit code: 0 success, 1 validation/usage error, 2 resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weil
