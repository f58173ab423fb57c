#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace rcw::cli {

/// Exit codes: 0 affirmative/pass, 1 negative with witness, 2 unknown or
/// budget exhausted, 64 usage error, 65 input data error.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

/// Runs one CLI invocation; args excludes the program name. The JSON report
/// goes to `out`, diagnostics to `err`. Never throws on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace rcw::cli
