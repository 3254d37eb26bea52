#pragma once

#include <stdexcept>
#include <string>

namespace ulam {

/// Base class for all library errors.
class UlamError : public std::runtime_error {
public:
    explicit UlamError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an argument was violated (bad value, out of range).
class ArgumentError : public UlamError {
public:
    using UlamError::UlamError;
};

/// Two values that must share a universe / symbol count do not.
class SizeMismatchError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// Malformed textual input (permutation strings, edge lists, cache files).
class ParseError : public UlamError {
public:
    using UlamError::UlamError;
};

/// An operation exceeded its configured node or size budget.  Raised instead
/// of running unbounded; never a silent approximation.
class BudgetExceededError : public UlamError {
public:
    using UlamError::UlamError;
};

}  // namespace ulam
