#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bergman {

// Command-line driver, split from main() so tests can run it with captured
// streams.  args excludes the program name.  Exit codes: 0 = success,
// 1 = a verified mathematical "no" (axiom violation, nonzero relation,
// failed weight check, point outside the fan), 2 = usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bergman
