#pragma once

#include <stdexcept>
#include <string>

namespace xlap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct BranchError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct CancellationError : Error { using Error::Error; };
struct ZeroDivisionError : Error { using Error::Error; };
struct DivergenceError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct StripError : Error { using Error::Error; };
struct UnknownIdentityError : Error { using Error::Error; };

}  // namespace xlap
