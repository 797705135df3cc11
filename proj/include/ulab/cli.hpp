#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ulab {

/// Full command-line front end. `args` excludes the program name. Returns the
/// process exit status: 0 success, 1 invalid input, 2 diagnosed
/// hypothesis/estimation/schedule failures. Reports go to `out` (or the
/// --out path); structured JSON errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulab
