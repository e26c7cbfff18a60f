#pragma once

#include <stdexcept>
#include <string>

namespace spinq {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NotRationalHomologySphere : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidChernVector : Error {
    using Error::Error;
};

struct InvalidCharge : Error {
    using Error::Error;
};

struct NotAlgebraicallySplit : Error {
    using Error::Error;
};

struct ConsistencyError : Error {
    using Error::Error;
};

struct DegenerateFunction : Error {
    using Error::Error;
};

struct AxiomViolation : Error {
    using Error::Error;
};

struct IncompleteTable : Error {
    using Error::Error;
};

struct InconsistentFamily : Error {
    using Error::Error;
};

struct NoMatch : Error {
    using Error::Error;
};

struct UnknownSigma : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace spinq
