#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrai {

/// Command-line front end. args[0] is the program name. Returns 0 on
/// success, 1 on validation/format errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace mrai
