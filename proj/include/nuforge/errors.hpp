#pragma once

#include <stdexcept>
#include <string>

namespace nuforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polynomial family or construction parameter outside its valid range.
class ParameterDomainError : public Error {
public:
    using Error::Error;
};

/// Catalog parameters that would not yield normalizable bound states.
class AdmissibilityError : public ParameterDomainError {
public:
    using ParameterDomainError::ParameterDomainError;
};

/// Evaluation point outside the open domain of a system.
class DomainError : public Error {
public:
    using Error::Error;
};

class UnsupportedOrderError : public Error {
public:
    using Error::Error;
};

/// The Rodrigues reference expansion is capped at a small degree.
class OracleRangeError : public Error {
public:
    using Error::Error;
};

class BranchNotImplementedError : public Error {
public:
    using Error::Error;
};

/// sigma(s(r)) vanishes inside the domain of the transformation.
class SingularTransformationError : public Error {
public:
    using Error::Error;
};

/// A pointwise function could not be written in the potential basis grammar.
class DecompositionError : public Error {
public:
    using Error::Error;
};

class NoBoundStateError : public Error {
public:
    using Error::Error;
};

/// Potential is not finite at some grid node.
class GridPlacementError : public Error {
public:
    using Error::Error;
};

}  // namespace nuforge
