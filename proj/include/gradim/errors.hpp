#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradim {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// scalar backends
struct DivisionByZeroError : Error { using Error::Error; };
struct DegenerateAllZeroError : Error { using Error::Error; };
struct NonFiniteError : Error { using Error::Error; };
struct MixedFieldError : Error { using Error::Error; };

// matrices
struct DimensionError : Error { using Error::Error; };
struct ZeroDiagonalEntryError : Error { using Error::Error; };

// graded polynomials
struct DegreeMismatchError : Error { using Error::Error; };
struct MissingAssignmentError : Error { using Error::Error; };
struct NotMultilinearError : Error { using Error::Error; };

// solvers
struct ZeroDegreeError : Error { using Error::Error; };
struct NonzeroTraceError : Error { using Error::Error; };
struct NonInvertibleDegreeError : Error { using Error::Error; };
struct IsIdentityTargetError : Error { using Error::Error; };
struct QuadraticUnsolvableError : Error { using Error::Error; };
struct UnsupportedModulusError : Error { using Error::Error; };
struct NotInImageError : Error { using Error::Error; };

// classification
struct NilpotentInputError : Error { using Error::Error; };
struct NotSemiHomogeneousError : Error { using Error::Error; };
struct WrongModulusError : Error { using Error::Error; };

/// Parse failure; `position` is a byte offset into the input text.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariableError : ParseError { using ParseError::ParseError; };
struct DegreeOutOfRangeError : ParseError { using ParseError::ParseError; };
struct UnsupportedCoefficientError : ParseError { using ParseError::ParseError; };

}  // namespace gradim
