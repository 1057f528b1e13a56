#pragma once

#include <stdexcept>
#include <string>

namespace sl2 {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A matrix that should lie in SL(2) has determinant away from 1.
struct NonUnimodular : Error {
    using Error::Error;
};

/// A linear back-substitution would divide by a vanishing pivot.
struct DegeneratePivot : Error {
    using Error::Error;
};

struct UnknownMap : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

/// Slip pair with a non-nilpotent member or commuting members.
struct DegenerateSlip : Error {
    using Error::Error;
};

struct PoleOfRational : Error {
    using Error::Error;
};

struct InvalidCost : Error {
    using Error::Error;
};

}  // namespace sl2
