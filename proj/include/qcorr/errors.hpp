#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotProjection : Error {
    using Error::Error;
};

struct NotEigenbasis : Error {
    using Error::Error;
};

struct ZeroShots : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

// Two outcome values from different spectra both fall inside the matching
// window of one target value; refusing to guess which one is meant.
struct AmbiguousValueMatch : Error {
    using Error::Error;
};

// A mathematically guaranteed cross-check (e.g. the two routes to the output
// distribution) disagreed beyond tolerance. Indicates a bug, not bad input.
struct InternalCheckFailure : Error {
    using Error::Error;
};

} // namespace qcorr
