#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matseq::cli {

/// Exit codes: 0 decided, 2 input or schema error, 3 unsupported ring or
/// characteristic, 4 internal inconsistency (including --verify mismatches).
enum ExitCode : int { kOk = 0, kInputError = 2, kUnsupported = 3, kInconsistent = 4 };

/// Runs one command line (without the program name). Input paths may be "-"
/// for `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace matseq::cli
