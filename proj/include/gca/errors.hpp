#pragma once

#include <stdexcept>
#include <string>

namespace gca {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A join climbed past step 3 or a meet dropped below step 0.
class StepError : public Error {
public:
    using Error::Error;
};

/// Two sides of an identity check evaluate to different steps.
class StepMismatchError : public Error {
public:
    using Error::Error;
};

/// An expression atom names a point that was never declared.
class UnknownPointError : public Error {
public:
    using Error::Error;
};

/// Numeric evaluation reached a formal point with no assigned coordinates.
class UnassignedAtomError : public Error {
public:
    using Error::Error;
};

/// An operation that requires distinct points was handed a repeat.
class DuplicatePointError : public Error {
public:
    using Error::Error;
};

/// An expression is outside the domain of the requested operation.
class InvalidExpressionError : public Error {
public:
    using Error::Error;
};

/// A configuration violates a stated hypothesis (named in the message).
class InvalidConfigError : public Error {
public:
    using Error::Error;
};

/// A rejection-sampling generator exhausted its retry budget.
class DegenerateSamplingError : public Error {
public:
    using Error::Error;
};

} // namespace gca
