#pragma once

#include <iosfwd>

namespace sdw::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kDomain = 3;
constexpr int kUnidentified = 4;
constexpr int kExceptional = 5;

// Runs one invocation; the JSON document goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdw::cli
