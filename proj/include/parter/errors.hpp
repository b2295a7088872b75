#pragma once

#include <stdexcept>
#include <string>

namespace parter {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed value passed to a constructor or operation (asymmetric data,
/// zero denominator, invalid generator configuration, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Index outside the valid range, or a shape mismatch between operands.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// Text input that does not conform to the matrix file grammar.
/// Messages carry a 1-based line number where applicable.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Inverse requested for a matrix with zero determinant.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of the operation does not hold for the input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An index set smaller than the operation's minimum cardinality.
class CardinalityError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Exhaustive enumeration refused: the matrix order exceeds the caller's cap.
class CapError : public Error {
public:
    using Error::Error;
};

/// A state the underlying mathematics rules out. Reaching this is a defect
/// in the library (or the deliberate rank corruption of the mutation build).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace parter
