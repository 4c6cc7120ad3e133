#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oag::cli {

// Exit codes: 0 SAT / verified / ok, 1 UNSAT / not verified, 2 bad input,
// 3 UNKNOWN.
enum Exit : int { kOk = 0, kNegative = 1, kInput = 2, kUnknown = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oag::cli
