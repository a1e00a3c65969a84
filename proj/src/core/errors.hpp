#pragma once

#include <stdexcept>
#include <string>

namespace corridor {

// Error taxonomy shared by the C++ core and the C API layer.
enum class ErrorCode {
    InvalidArgument = 1,
    Domain = 2,
    Horizon = 3,
    AmbiguousKink = 4,
    NotReduced = 5,
    Infeasible = 6,
    LpInfeasible = 7,
    NoConvergence = 8,
    Io = 9,
    Internal = 10,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace corridor
