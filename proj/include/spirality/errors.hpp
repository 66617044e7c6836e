#pragma once

#include <stdexcept>
#include <string>

namespace spirality {

/// Base class for every error thrown by this library. Structural problems
/// in user documents are reported as data (ValidationReport); exceptions
/// cover contract violations and inputs no result can be defined for.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two homology classes written in different bases were combined.
struct BasisError : Error {
    using Error::Error;
};

/// A slope, spirality or reduction saw a zero numerator or denominator.
struct ZeroSlopeError : Error {
    using Error::Error;
};

/// A gluing matrix breaks |det| = 1 or the |q| = 1 simplicity condition.
struct MatrixError : Error {
    using Error::Error;
};

/// The two torus fibers fail to span: |fiber wedge fiber'| != 1.
struct FiberBasisError : Error {
    using Error::Error;
};

/// Governor requested on a surface with no edges.
struct NoEdgesError : Error {
    using Error::Error;
};

/// A walk does not close up in the surface dual graph.
struct BrokenCycleError : Error {
    using Error::Error;
};

/// The covering genus formula produced a fractional or negative genus.
struct GenusError : Error {
    using Error::Error;
};

/// A pair cannot be doubled along its free boundary.
struct DoublingError : Error {
    using Error::Error;
};

/// An edge, vertex, circle or cycle id failed to resolve.
struct UnknownIdError : Error {
    using Error::Error;
};

/// A caller-supplied parameter is outside the accepted range.
struct ParameterError : Error {
    using Error::Error;
};

/// A pair document could not be parsed into the model.
struct DocumentError : Error {
    using Error::Error;
};

/// Internal cross-check failed while assembling a known-good object.
struct ConstructionBug : Error {
    using Error::Error;
};

} // namespace spirality
