#pragma once

#include <stdexcept>
#include <string>

namespace ekrgl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gfq
struct NonPrimeCharacteristic : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct IncompatibleExtension : Error { using Error::Error; };

// matfq
struct ShapeMismatch : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };

// glgroup
struct EnumerationTooLarge : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct SingularTranslate : Error { using Error::Error; };
struct NonGroupElement : Error { using Error::Error; };

// spread
struct NotDivisible : Error { using Error::Error; };
struct NotComplementary : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct MalformedMember : Error { using Error::Error; };
struct NotCoclique : Error { using Error::Error; };

// ekr / igraph / symbase
struct SearchTooLarge : Error { using Error::Error; };
struct EqualityConditionViolated : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };

} // namespace ekrgl
