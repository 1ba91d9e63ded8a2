#ifndef COSMOFV_ERROR_HPP
#define COSMOFV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cosmofv {

// Invalid operation input (precondition violation on a public API call).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Configuration file problem; line == 0 when no line applies.
struct ConfigError : std::runtime_error {
    int line = 0;
    explicit ConfigError(const std::string& what, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
};

// Conservative state that cannot be inverted to primitives.
struct RecoveryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simulation aborted mid-run (non-finite state, failed recovery, dt collapse).
struct RunAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cosmofv

#endif
