#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qosp {

// Command-line front end. `args` excludes the program name. Returns the
// process exit status: 0 when every requested check passed, 1 when a check
// failed (the report is still written to `out`), 2 on configuration or
// input errors (diagnostic written to `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qosp
