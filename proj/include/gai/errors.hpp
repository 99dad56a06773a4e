#pragma once

#include <stdexcept>
#include <string>

namespace gai {

/// Base class of all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual or JSON input. CLI exit code 1.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was invoked on arguments violating its precondition. CLI exit code 2.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured budget. Budgets are hard
/// limits; nothing is silently truncated. CLI exit code 3.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A reduction step whose increment does not strictly grow the target antecedent.
class NotApplicableError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A reduction step whose resulting formula collides with one already present.
class InvariantViolationError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

} // namespace gai
