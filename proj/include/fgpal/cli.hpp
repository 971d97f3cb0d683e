#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fgpal {

/// Command dispatch for the fgpal tool. `args` excludes the program name.
/// Returns the process exit code: 0 on success, 2 on input errors, 3 on I/O
/// errors, 1 when an --oracle cross-check disagrees.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fgpal
