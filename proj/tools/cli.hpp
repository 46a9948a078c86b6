#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace realhur::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    validation_error = 2,
    infra_error = 3,
    property_failure = 4,
};

/// Runs one command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realhur::cli
