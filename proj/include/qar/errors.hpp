// errors.hpp - Exception hierarchy shared by the refrigerator toolkit

#pragma once

#include <stdexcept>
#include <string>

namespace qar {

// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A well-formed request that cannot be carried out numerically.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateKernel : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class SingularRates : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class IntegrationFailure : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class UndefinedChi : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class InconsistentSpeedLimit : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class BoundaryMaximum : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class PoleError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

} // namespace qar
