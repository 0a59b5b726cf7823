#pragma once

#include <stdexcept>
#include <string>

namespace tempwave {

// Error taxonomy shared by all modules. The numeric value doubles as the
// process exit code used by the CLI dispatcher.
enum class ErrorKind : int {
    config = 1,      // invalid parameters, unparsable input, bad grid
    capacity = 2,    // dense-solve size over the configured budget
    numerical = 3,   // pivot breakdown, residual blowup, quadrature refusal
    mismatch = 4,    // reproduction disagrees with the reference values
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace tempwave
