#pragma once

#include <stdexcept>
#include <string>

namespace lsu {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division that should be exact by theory was not. On theory-valid inputs this
// never fires; when it does, it points at a bug or an invalid input.
struct InexactDivision : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct OddDimension : Error {
    using Error::Error;
};

struct NonSquare : Error {
    using Error::Error;
};

struct ZeroAlpha : Error {
    using Error::Error;
};

struct ZeroScale : Error {
    using Error::Error;
};

struct ZeroDeterminant : Error {
    using Error::Error;
};

struct NotFullRank : Error {
    using Error::Error;
};

struct SingularLeadingBlock : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace lsu
