#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsct {

/// Run the command-line front end on the given arguments (program name
/// excluded). Returns 0 when every requested check passes, 1 when a check
/// or validation fails, 2 on usage or guard errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rsct
