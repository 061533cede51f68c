#pragma once

#include <stdexcept>
#include <string>

namespace ncfgl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation needed data beyond the truncation order it was given.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// Series not invertible (leading term is not the required unit).
struct NotInvertible : Error {
    using Error::Error;
};

// Extraction / express target lies outside the admissible span.
struct NotInSpan : Error {
    using Error::Error;
};

// Re-expression into the m_I basis failed: input is not quasi-symmetric.
struct NotQuasiSymmetric : Error {
    using Error::Error;
};

struct BadInput : Error {
    using Error::Error;
};

}  // namespace ncfgl
