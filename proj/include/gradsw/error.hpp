#pragma once

#include <stdexcept>
#include <string>

namespace gradsw {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument: non-prime modulus, dimension mismatch, malformed descriptor.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Division by zero or inversion of a non-unit.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A rational function was evaluated on its excluded locus.
class BadSpecialization : public DomainError {
public:
    using DomainError::DomainError;
};

/// A theorem hypothesis (D^p = 0, nilpotency, p*d = 0, ...) does not hold.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A decomposition failed the grading check.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

/// A computation contradicted a proven statement; indicates a bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// Malformed input document. `pointer` is a JSON pointer to the offending node.
class SchemaError : public Error {
public:
    SchemaError(std::string pointer, const std::string& what)
        : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

}  // namespace gradsw
