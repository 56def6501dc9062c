#pragma once

#include <stdexcept>
#include <string>

namespace bxc {

// Base of every error raised by the library. The CLI maps the two branches
// below onto distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller asked for something outside the mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// f and u carry the exponents 1/(2nu+1) and 1/(2nu); these blow up at
// nu = -1/2 and nu = 0 respectively.
class RemovableExponentError : public DomainError {
public:
    using DomainError::DomainError;
};

// The principal starlikeness equation was requested for an order that lives
// in the rotated window.
class BranchError : public DomainError {
public:
    using DomainError::DomainError;
};

// Numerical failures: these signal a bug or an exhausted budget, never bad input.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class BracketError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class OverflowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace bxc
