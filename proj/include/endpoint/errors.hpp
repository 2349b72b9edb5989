#pragma once

#include <stdexcept>
#include <string>

namespace endpoint {

// Numerical failures map to CLI exit code 2; DomainError is a caller error.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class Overflow : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class Underflow : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Lax series evaluated outside the radius where its tail estimate holds.
class RadiusExceeded : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace endpoint
