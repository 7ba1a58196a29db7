#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperkit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kParseError = 2,
    kUnsupported = 3,
    kNumericalDegeneracy = 4,
};

/// Entry point of the `hyperkit` command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperkit::cli
