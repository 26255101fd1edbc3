#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero polynomial") {}
};

/// Scalar division hit a coefficient that is not divisible.
struct OddCoefficient : Error {
    using Error::Error;
};

/// A Laurent polynomial (negative exponent) reached an operation that
/// requires a genuine polynomial.
struct LaurentInput : Error {
    using Error::Error;
};

/// eval_t needs every term to be a power of the combination uv.
struct NotPureT : Error {
    using Error::Error;
};

struct BadRange : Error {
    using Error::Error;
};

struct NonPolynomialResult : Error {
    using Error::Error;
};

struct SlopeMismatch : Error {
    using Error::Error;
};

struct BadVariant : Error {
    using Error::Error;
};

struct GuardExceeded : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

/// An operation was called outside its documented domain.
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace hodge
