#pragma once

#include <stdexcept>
#include <string>

namespace shrinklab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-manifold, inconsistently oriented, or non-orientable mesh.
class OrientationError : public Error {
public:
    using Error::Error;
};

/// Triangle area below the degeneracy floor.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// Trusted value requested at a boundary vertex.
class BoundaryError : public Error {
public:
    using Error::Error;
};

/// A field that must be compactly supported is nonzero at or near the boundary.
class SupportError : public Error {
public:
    using Error::Error;
};

/// A profile or orbit reached r <= 0.
class AxisCrossingError : public Error {
public:
    using Error::Error;
};

/// Shooting bracket contains no sign change of the closure defect.
class BracketError : public Error {
public:
    using Error::Error;
};

/// A field that must be positive has a nonpositive entry.
class PositivityError : public Error {
public:
    using Error::Error;
};

/// Explicit time step exceeds the stability bound.
class TimestepError : public Error {
public:
    using Error::Error;
};

/// A time argument lies outside the required domain (e.g. t >= 0).
class TimeDomainError : public Error {
public:
    using Error::Error;
};

/// Ambient dimension outside the validity range of a closed-form identity.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Eigensolve or linear solve failed to reach its residual tolerance.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Mesh fails the shrinker residual threshold required by an operation.
class NotAShrinkerError : public Error {
public:
    using Error::Error;
};

/// Finite-difference step produced an invalid (self-intersecting) offset mesh.
class StepError : public Error {
public:
    using Error::Error;
};

/// Malformed input file.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace shrinklab
