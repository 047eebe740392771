#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ranklens::cli {

// Exit codes: 0 positive result, 1 negative analytic result, 2 precondition
// or usage violation, 3 malformed input.
enum ExitCode : int { kOk = 0, kNegative = 1, kPrecondition = 2, kMalformed = 3 };

// Runs one command line (args excludes the program name). Input file "-"
// reads `in`. Results go to `out` unless --output is given; error records go
// to `err` as a single JSON line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ranklens::cli
