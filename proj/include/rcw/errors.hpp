#pragma once

#include <stdexcept>
#include <string>

namespace rcw {

/// Caller passed a vertex outside [0, n).
struct out_of_range_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Caller passed a pair {v, v}.
struct self_loop_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument violates a documented precondition (sizes, ranges, set relations).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input document could not be parsed.
struct malformed_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search exhausted its node budget where an exact answer was required.
struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rcw
