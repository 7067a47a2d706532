#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace errcode::cli {

// Exit codes: 0 success / valid, 1 well-formed input with a negative answer,
// 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Runs one verb. Writes exactly one JSON document to `out` and a human
// summary to `err`. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace errcode::cli
