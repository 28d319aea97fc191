#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace darboux::cli {

// Runs one CLI invocation. argv excludes the program name. Reports go to
// `out` (or the --out path); diagnostics to `err`. Exit code contract:
// 0 = success, 1 = usage error, 2 = certification failure.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace darboux::cli
