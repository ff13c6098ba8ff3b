#pragma once

#include <stdexcept>

namespace copmem {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be parsed as multi-FASTA.
struct ParseError : Error {
    using Error::Error;
};

// Input exceeds a hard resource limit (32-bit position width, table allocation).
struct ResourceError : Error {
    using Error::Error;
};

// Parameter combination violates a documented precondition.
struct ArgumentError : Error {
    using Error::Error;
};

}  // namespace copmem
