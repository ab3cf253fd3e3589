#pragma once

#include <stdexcept>
#include <string>

namespace reconlab {

/// Caller supplied arguments that violate an operation's preconditions.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration would exceed the configured cap.
class CapExceeded : public PreconditionError {
public:
    explicit CapExceeded(const std::string& what) : PreconditionError(what) {}
};

/// Two routes that must agree did not. Always a bug in this library.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw PreconditionError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace reconlab
