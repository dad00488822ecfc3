#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlcalc {

// Exit codes of the command-line front end.
constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlcalc
