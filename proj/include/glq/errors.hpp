#pragma once

#include <stdexcept>
#include <string>

namespace glq {

// Base class for every error raised by the library. Subclasses mirror the
// failure modes of the individual modules so callers can map them to exit
// codes without string matching.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gf
struct NonPrimeCharacteristic : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };

// linalg
struct DimMismatch : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct LayoutInconsistent : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// coset
struct NotComposable : Error { using Error::Error; };
struct NotComparable : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

// colligation
struct BlockMismatch : Error { using Error::Error; };
struct SingularPencil : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

}  // namespace glq
