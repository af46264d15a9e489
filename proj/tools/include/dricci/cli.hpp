#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dricci::cli {

enum ExitCode : int {
    kOk = 0,
    kFailed = 1,         // a checked inequality failed, or an internal error
    kInputError = 2,     // unreadable input or a domain error
    kNothingChecked = 3, // every verdict was hypothesis-not-met or vacuous
    kBudget = 4,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dricci::cli
