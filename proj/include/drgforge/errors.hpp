#pragma once

#include <stdexcept>
#include <string>

namespace drgforge {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error {
    using Error::Error;
};
struct UnsupportedOrder : Error {
    using Error::Error;
};
struct EntryOutOfRange : Error {
    using Error::Error;
};
struct EnumerationCapExceeded : Error {
    using Error::Error;
};
struct BadParameters : Error {
    using Error::Error;
};
struct VertexOutOfRange : Error {
    using Error::Error;
};
struct Disconnected : Error {
    using Error::Error;
};
struct NotAtDistanceTwo : Error {
    using Error::Error;
};
struct SizeCapExceeded : Error {
    using Error::Error;
};
struct CertificationFailed : Error {
    using Error::Error;
};
struct DegenerateSmallestEigenvalue : Error {
    using Error::Error;
};
struct UnboundedRegion : Error {
    using Error::Error;
};
struct TooManyEigenvalues : Error {
    using Error::Error;
};
struct NotLocallyGrid : Error {
    using Error::Error;
};
struct MuGraphNotHexagon : Error {
    using Error::Error;
};
struct DistinctMuGraphsViolated : Error {
    using Error::Error;
};
struct AxiomViolation : Error {
    using Error::Error;
};
struct SignNotConstant : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace drgforge
