#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrank {

/// Runs the command-line front end against explicit streams. Exit code 0 on
/// success (including conjectures that hold to order), 1 when a check fails
/// or a counterexample is found, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrank
