#pragma once

#include <stdexcept>
#include <string>

namespace cyclospec {

/// Base class of every computation error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation requested at a pole (Γ at non-positive integers, ζ at s = 1).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument inside the domain but outside the supported accuracy region.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A character or parameter does not satisfy the hypotheses of an operation
/// (primitive, even, real, strip membership, |t| >= 8, ...).
class HypothesisError : public Error {
public:
    using Error::Error;
};

class NoZeroFoundError : public Error {
public:
    using Error::Error;
};

/// Denominator too small to form a meaningful ratio.
class DivisionGuardError : public Error {
public:
    using Error::Error;
};

/// Spectrum with more than one zero eigenvalue.
class DisconnectedGraphError : public Error {
public:
    using Error::Error;
};

}  // namespace cyclospec
