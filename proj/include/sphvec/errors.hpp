#pragma once

#include <stdexcept>
#include <string>

namespace sphvec {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vector with norm below the zero threshold where a non-zero vector is required.
struct ZeroVectorError : Error {
    using Error::Error;
};

/// A quaternion with norm below the zero threshold where a non-zero quaternion is required.
struct ZeroQuaternionError : Error {
    using Error::Error;
};

/// An input required to be unit-norm is not, within the admission tolerance.
struct NotUnitError : Error {
    using Error::Error;
};

/// A value violates its type invariant beyond the repairable band.
struct InvariantViolation : Error {
    using Error::Error;
};

/// Operation requiring a support plane applied to a zero or straight spherical-vector.
struct DegenerateSupportError : Error {
    using Error::Error;
};

/// A vector required to lie in the support plane does not.
struct NotInSupportError : Error {
    using Error::Error;
};

/// Malformed quaternion or spherical-vector literal.
struct ParseError : Error {
    using Error::Error;
};

/// Malformed scene data or unknown figure name.
struct SceneError : Error {
    using Error::Error;
};

} // namespace sphvec
