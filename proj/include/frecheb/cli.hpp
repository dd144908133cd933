#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frecheb::cli {

enum ExitStatus : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitInvariant = 2,
};

/// Runs one command line. `args` excludes the program name.
/// `-` as an input path reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace frecheb::cli
