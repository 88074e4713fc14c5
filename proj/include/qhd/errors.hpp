#pragma once

#include <stdexcept>
#include <string>

namespace qhd {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a closed-form function (P <= 0, rho <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Equal end-state densities: the jump conditions cannot be solved for velocities.
class DegenerateShockError : public Error {
public:
    using Error::Error;
};

/// s = 0, or end states that admit no Lax shock.
class NoAdmissibleProfileError : public Error {
public:
    using Error::Error;
};

/// Neither existence case applies. The message lists the failed inequalities.
class NoProfileGuaranteeError : public Error {
public:
    using Error::Error;
};

/// Profile constants that do not yield two positive equilibria.
class InvalidConstantsError : public Error {
public:
    using Error::Error;
};

/// A precondition of a numerical routine was not met by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Failures of the numerical machinery itself.
class NumericalError : public Error {
public:
    using Error::Error;
};

class VacuumCrossingError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StepUnderflowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class BracketError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonConvergenceError : public NumericalError {
public:
    NonConvergenceError(const std::string& what, double terminal_error)
        : NumericalError(what), terminal_error_(terminal_error) {}

    double terminal_error() const noexcept { return terminal_error_; }

private:
    double terminal_error_;
};

class ContainmentError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace qhd
