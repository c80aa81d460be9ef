#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riesz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation outside [0, inf) or a similar out-of-domain request.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input value. `index` names the offending breakpoint/entry.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A caller-supplied precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Something that the mathematics guarantees did not happen. Never expected
/// on valid input; the CLI maps it to exit code 2.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace riesz
