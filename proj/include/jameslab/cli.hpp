#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jameslab {

/// Runs the command-line surface. Exit codes: 0 all assertions pass,
/// 1 assertion failure, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jameslab
