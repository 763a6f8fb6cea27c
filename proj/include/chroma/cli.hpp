#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chroma::cli {

enum ExitCode : int
{
    ok = 0,
    input_error = 1,
    budget_exhausted = 2
};

/// Runs one command line (args[0] is the program name). Graph inputs are read
/// from `in` when no --graph, --input or --family option is given. A failing
/// input line is reported on `err` and does not stop the remaining lines; the
/// exit code is the worst outcome seen, budget exhaustion ranking above input
/// errors.
int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err);

} // namespace chroma::cli
