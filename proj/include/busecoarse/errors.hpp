#pragma once

#include <stdexcept>
#include <string>

namespace busecoarse {

/// Failure categories. The CLI maps `Usage` to exit code 2 and every other
/// category to exit code 3.
enum class ErrorKind {
    Usage,
    InvalidPoint,
    Domain,
    Precondition,
    UnsupportedConfiguration,
    Coverage,
    Unreachable,
    Evaluation,
    InvariantViolation,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed point for the given space (wrong dimension, wrong component, non-finite).
class InvalidPointError : public Error {
public:
    explicit InvalidPointError(const std::string& what) : Error(ErrorKind::InvalidPoint, what) {}
};

/// A scalar parameter is outside the admissible range (t outside [0,1], t <= 0, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

/// Input is well-formed but outside what the solver supports (mixed-block barycenters, raw metrics).
class UnsupportedConfigurationError : public Error {
public:
    explicit UnsupportedConfigurationError(const std::string& what)
        : Error(ErrorKind::UnsupportedConfiguration, what) {}
};

class CoverageError : public Error {
public:
    explicit CoverageError(const std::string& what) : Error(ErrorKind::Coverage, what) {}
};

class UnreachableError : public Error {
public:
    explicit UnreachableError(const std::string& what) : Error(ErrorKind::Unreachable, what) {}
};

class EvaluationError : public Error {
public:
    explicit EvaluationError(const std::string& what) : Error(ErrorKind::Evaluation, what) {}
};

class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what)
        : Error(ErrorKind::InvariantViolation, what) {}
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

}  // namespace busecoarse
