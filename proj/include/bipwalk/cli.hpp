#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipwalk {

// Command-line driver behind the bipwalk binary. `args` excludes the program
// name. Exit codes: 0 success (including "accept" from `test`), 1 the tester
// rejected, 2 usage error, 3 runtime error. Commands that consume randomness
// and were not given --seed draw one from entropy and report it on `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipwalk
